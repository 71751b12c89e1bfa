#include "motss/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "motss/errors.hpp"

namespace motss {

namespace {

double parse_price_token(const std::string& token, int line_no) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected a finite decimal price, got '" + token + "'");
  }
  return value;
}

std::vector<double> parse_csv_prices(const std::string& field, int line_no) {
  std::vector<double> out;
  std::string token;
  std::istringstream ss(field);
  while (std::getline(ss, token, ',')) {
    out.push_back(parse_price_token(token, line_no));
  }
  if (!field.empty() && field.back() == ',') {
    throw ParseError("line " + std::to_string(line_no) +
                     ": trailing comma in price list");
  }
  return out;
}

bool blank(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

InputSequence parse_instance(std::istream& in) {
  std::string line;
  int line_no = 0;
  do {
    if (!std::getline(in, line)) {
      throw ParseError("missing 'bounds' header line");
    }
    ++line_no;
  } while (blank(line));

  std::istringstream header(line);
  std::string tag, min_field, max_field, extra;
  header >> tag >> min_field >> max_field;
  if (tag != "bounds" || min_field.empty() || max_field.empty() ||
      (header >> extra)) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": header must be 'bounds m_1,...,m_k M_1,...,M_k'");
  }
  Bounds bounds = validate_bounds(parse_csv_prices(min_field, line_no),
                                  parse_csv_prices(max_field, line_no));

  std::vector<std::vector<double>> prices;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::vector<double> p = parse_csv_prices(line, line_no);
    if (static_cast<int>(p.size()) != bounds.k()) {
      throw LengthMismatch("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(bounds.k()) + " prices, got " +
                           std::to_string(p.size()));
    }
    prices.push_back(std::move(p));
  }
  return InputSequence(bounds, std::move(prices));
}

InputSequence parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file '" + path + "'");
  return parse_instance(in);
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_instance(const InputSequence& seq, std::ostream& out) {
  const Bounds& b = seq.bounds();
  out << "bounds ";
  for (int i = 0; i < b.k(); ++i) {
    out << (i ? "," : "") << format_real(b.min_price(i));
  }
  out << ' ';
  for (int i = 0; i < b.k(); ++i) {
    out << (i ? "," : "") << format_real(b.max_price(i));
  }
  out << '\n';
  for (const PriceVector& p : seq.prices()) {
    for (int i = 0; i < p.k(); ++i) {
      out << (i ? "," : "") << format_real(p[i]);
    }
    out << '\n';
  }
}

void write_instance_file(const InputSequence& seq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write instance file '" + path + "'");
  write_instance(seq, out);
}

}  // namespace motss
