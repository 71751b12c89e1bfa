#include "motss/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "motss/errors.hpp"

namespace motss {

namespace {

std::string index_message(const char* what, int i, double value) {
  std::ostringstream os;
  os << what << " at objective " << (i + 1) << " (value " << value << ")";
  return os.str();
}

}  // namespace

Bounds::Bounds(std::vector<double> min_prices, std::vector<double> max_prices,
               IntervalKind kind, std::vector<std::vector<double>> grids)
    : min_(std::move(min_prices)),
      max_(std::move(max_prices)),
      kind_(kind),
      grids_(std::move(grids)) {
  phi_.resize(min_.size());
  for (std::size_t i = 0; i < min_.size(); ++i) phi_[i] = max_[i] / min_[i];
}

Bounds Bounds::real(std::vector<double> min_prices,
                    std::vector<double> max_prices) {
  if (min_prices.empty() || min_prices.size() != max_prices.size()) {
    throw LengthMismatch("bounds vectors must have equal positive length");
  }
  for (std::size_t i = 0; i < min_prices.size(); ++i) {
    if (!(min_prices[i] > 0.0) || !std::isfinite(min_prices[i])) {
      throw NonPositivePrice(
          index_message("minimum price must be positive and finite",
                        static_cast<int>(i), min_prices[i]));
    }
    if (!std::isfinite(max_prices[i])) {
      throw InvalidParameter(index_message("maximum price must be finite",
                                           static_cast<int>(i),
                                           max_prices[i]));
    }
    if (min_prices[i] > max_prices[i]) {
      throw InvertedInterval(index_message("m_i exceeds M_i",
                                           static_cast<int>(i),
                                           min_prices[i]));
    }
  }
  return Bounds(std::move(min_prices), std::move(max_prices),
                IntervalKind::Real, {});
}

Bounds Bounds::finite_grid(std::vector<std::vector<double>> points) {
  if (points.empty()) {
    throw LengthMismatch("finite grid needs at least one objective");
  }
  std::vector<double> lo(points.size()), hi(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto& g = points[i];
    if (g.empty()) {
      throw InvalidParameter("empty grid for objective " +
                             std::to_string(i + 1));
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (!(g.front() > 0.0) || !std::isfinite(g.back())) {
      throw NonPositivePrice(index_message("grid point must be positive",
                                           static_cast<int>(i), g.front()));
    }
    lo[i] = g.front();
    hi[i] = g.back();
  }
  return Bounds(std::move(lo), std::move(hi), IntervalKind::FiniteGrid,
                std::move(points));
}

Bounds Bounds::geometric_grid(const std::vector<double>& min_prices,
                              const std::vector<double>& max_prices,
                              const std::vector<int>& counts) {
  Bounds base = Bounds::real(min_prices, max_prices);
  if (counts.size() != min_prices.size()) {
    throw LengthMismatch("grid size list must match the number of objectives");
  }
  std::vector<std::vector<double>> grids(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const int n = counts[i];
    const double m = base.min_price(static_cast<int>(i));
    const double M = base.max_price(static_cast<int>(i));
    if (n < 1 || (n == 1 && m != M)) {
      throw InvalidParameter("grid size must be >= 2 on a non-degenerate "
                             "interval (objective " +
                             std::to_string(i + 1) + ")");
    }
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n));
    if (n == 1 || m == M) {
      g.push_back(m);
    } else {
      const double step = std::log(M / m) / (n - 1);
      for (int j = 0; j < n; ++j) {
        g.push_back(j == 0 ? m : (j == n - 1 ? M : m * std::exp(step * j)));
      }
    }
    grids[i] = std::move(g);
  }
  return Bounds::finite_grid(std::move(grids));
}

const std::vector<double>& Bounds::grid(int i) const {
  if (kind_ != IntervalKind::FiniteGrid) {
    throw NotFiniteGrid("bounds carry real intervals, not finite grids");
  }
  return grids_[static_cast<std::size_t>(i)];
}

long long Bounds::grid_point_count() const {
  if (kind_ != IntervalKind::FiniteGrid) {
    throw NotFiniteGrid("bounds carry real intervals, not finite grids");
  }
  long long n = 1;
  for (const auto& g : grids_) n *= static_cast<long long>(g.size());
  return n;
}

bool Bounds::is_canonical() const {
  for (std::size_t i = 1; i < phi_.size(); ++i) {
    if (phi_[i - 1] < phi_[i]) return false;
  }
  return true;
}

bool Bounds::contains(std::span<const double> p) const {
  if (p.size() != min_.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(min_[i] <= p[i] && p[i] <= max_[i])) return false;
  }
  return true;
}

Bounds validate_bounds(const std::vector<double>& min_prices,
                       const std::vector<double>& max_prices) {
  return Bounds::real(min_prices, max_prices);
}

bool CanonicalOrdering::is_identity() const {
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (permutation[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<double> CanonicalOrdering::apply(std::span<const double> v) const {
  if (v.size() != permutation.size()) {
    throw LengthMismatch("vector arity does not match the ordering");
  }
  std::vector<double> out(v.size());
  for (std::size_t pos = 0; pos < permutation.size(); ++pos) {
    out[pos] = v[static_cast<std::size_t>(permutation[pos])];
  }
  return out;
}

std::vector<double> CanonicalOrdering::inverse(
    std::span<const double> v) const {
  if (v.size() != permutation.size()) {
    throw LengthMismatch("vector arity does not match the ordering");
  }
  std::vector<double> out(v.size());
  for (std::size_t pos = 0; pos < permutation.size(); ++pos) {
    out[static_cast<std::size_t>(permutation[pos])] = v[pos];
  }
  return out;
}

std::pair<Bounds, CanonicalOrdering> canonicalize(const Bounds& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.k()));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int c) {
    return b.fluctuation(a) > b.fluctuation(c);
  });

  CanonicalOrdering ordering{perm, true};
  std::vector<double> lo = ordering.apply(b.min_prices());
  std::vector<double> hi = ordering.apply(b.max_prices());
  if (b.interval_kind() == IntervalKind::FiniteGrid) {
    std::vector<std::vector<double>> grids(perm.size());
    for (std::size_t pos = 0; pos < perm.size(); ++pos) {
      grids[pos] = b.grid(perm[pos]);
    }
    return {Bounds::finite_grid(std::move(grids)), std::move(ordering)};
  }
  return {Bounds::real(std::move(lo), std::move(hi)), std::move(ordering)};
}

PriceVector::PriceVector(std::vector<double> values, const Bounds& b)
    : values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != b.k()) {
    throw LengthMismatch("price vector arity does not match bounds");
  }
  for (int i = 0; i < b.k(); ++i) {
    const double p = values_[static_cast<std::size_t>(i)];
    if (!std::isfinite(p) || p < b.min_price(i) || p > b.max_price(i)) {
      throw OutOfBounds(index_message("price outside [m_i, M_i]", i, p));
    }
  }
}

PriceVector PriceVector::min_of(const Bounds& b) {
  return PriceVector(b.min_prices());
}

PriceVector PriceVector::max_of(const Bounds& b) {
  return PriceVector(b.max_prices());
}

bool componentwise_leq(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

bool lexicographic_less(std::span<const double> x, std::span<const double> y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

InputSequence::InputSequence(const Bounds& b,
                             std::vector<std::vector<double>> prices)
    : bounds_(std::make_shared<Bounds>(b)) {
  prices_.reserve(prices.size());
  for (auto& p : prices) prices_.emplace_back(std::move(p), *bounds_);
}

InputSequence::InputSequence(std::shared_ptr<const Bounds> b,
                             std::vector<PriceVector> prices)
    : bounds_(std::move(b)), prices_(std::move(prices)) {
  for (const auto& p : prices_) {
    if (!bounds_->contains(p.values())) {
      throw OutOfBounds("sequence element violates the shared bounds");
    }
  }
}

}  // namespace motss
