#include "motss/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "motss/adversary.hpp"
#include "motss/algorithms.hpp"
#include "motss/analysis.hpp"
#include "motss/errors.hpp"
#include "motss/instance_io.hpp"
#include "motss/pareto.hpp"
#include "motss/random_instances.hpp"
#include "motss/serialize.hpp"

namespace motss {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::string csv_sibling(const std::string& json_path) {
  const auto dot = json_path.find_last_of('.');
  const auto slash = json_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return json_path + ".csv";
  }
  return json_path.substr(0, dot) + ".csv";
}

Bounds bounds_from_config(const ExperimentConfig& cfg) {
  if (cfg.bounds_min.empty()) {
    throw ConfigError("this mode needs --bounds m_1,...,m_k M_1,...,M_k");
  }
  Bounds b = validate_bounds(cfg.bounds_min, cfg.bounds_max);
  if (!cfg.grid_counts.empty()) {
    return Bounds::geometric_grid(cfg.bounds_min, cfg.bounds_max,
                                  cfg.grid_counts);
  }
  return b;
}

Policy resolve_policy(const std::string& name, const Scalarization& f,
                      const Bounds& b) {
  if (name == "bpp") return bpp_policy(f, b);
  if (name == "rpp") return rpp_policy(b);
  if (name == "accept-first") return accept_first_policy();
  if (name == "reject-all") return reject_all_policy();
  throw ConfigError("unknown policy '" + name +
                    "' (expected bpp|rpp|accept-first|reject-all)");
}

struct ModeOutput {
  json summary;           // always produced
  std::string csv;        // detail table; may be empty
  bool csv_is_primary = false;  // simulate/front/sweep print CSV to stdout
};

ModeOutput mode_simulate(const ExperimentConfig& cfg) {
  const InputSequence seq = parse_instance_file(cfg.instance_path);
  const Scalarization f = resolve_scalarization(cfg.scalarization, seq.bounds());
  const RunOutcome outcome =
      run_generic(resolve_policy(cfg.policy, f, seq.bounds()), seq);

  std::ostringstream csv;
  const int k = seq.bounds().k();
  csv << "decision,accepted_at";
  for (int i = 1; i <= k; ++i) csv << ",returned_" << i;
  csv << '\n'
      << (outcome.accepted() ? "accepted" : "rejected_all") << ','
      << (outcome.accepted() ? std::to_string(*outcome.accepted_at) : "")
      << ',' << csv_row(outcome.returned.values()) << "\n\n";
  csv << "t";
  for (int i = 1; i <= k; ++i) csv << ",p_" << i;
  csv << ",accept\n";
  for (std::size_t t = 0; t < outcome.trace.size(); ++t) {
    csv << (t + 1) << ',' << csv_row(seq[static_cast<int>(t)].values()) << ','
        << (outcome.trace[t] ? 1 : 0) << '\n';
  }

  ModeOutput out;
  out.summary = json{{"f", f.name()},
                     {"policy", cfg.policy},
                     {"instance", to_json(seq)},
                     {"outcome", to_json(outcome)}};
  out.csv = csv.str();
  out.csv_is_primary = true;
  return out;
}

ModeOutput mode_front(const ExperimentConfig& cfg) {
  const InputSequence seq = parse_instance_file(cfg.instance_path);
  const ParetoFront front = pareto_maximal(seq);

  std::ostringstream csv;
  const int k = seq.bounds().k();
  csv << "member";
  for (int i = 1; i <= k; ++i) csv << ",p_" << i;
  csv << ",source_indices\n";
  for (int j = 0; j < front.size(); ++j) {
    csv << (j + 1) << ',' << csv_row(front.members[static_cast<std::size_t>(j)].values())
        << ',';
    const auto& src = front.source_indices[static_cast<std::size_t>(j)];
    for (std::size_t s = 0; s < src.size(); ++s) {
      csv << (s ? ";" : "") << src[s];
    }
    csv << '\n';
  }

  ModeOutput out;
  out.summary = json{{"instance", to_json(seq)}, {"front", to_json(front)}};
  out.csv = csv.str();
  out.csv_is_primary = true;
  return out;
}

ModeOutput mode_ratio(const ExperimentConfig& cfg) {
  const InputSequence seq = parse_instance_file(cfg.instance_path);
  const Scalarization f = resolve_scalarization(cfg.scalarization, seq.bounds());
  const RunOutcome outcome =
      run_generic(resolve_policy(cfg.policy, f, seq.bounds()), seq);
  const ParetoFront front = pareto_maximal(seq);
  const RatioReport report = competitive_ratio(f, outcome, front);

  ModeOutput out;
  out.summary = json{{"f", f.name()},
                     {"policy", cfg.policy},
                     {"outcome", to_json(outcome)},
                     {"front", to_json(front)},
                     {"report", to_json(report)}};
  return out;
}

ModeOutput mode_zvalue(const ExperimentConfig& cfg) {
  Bounds b = bounds_from_config(cfg);
  json applied_ordering;
  if (cfg.canonicalize_bounds) {
    auto [canon, ordering] = canonicalize(b);
    b = std::move(canon);
    applied_ordering = ordering.permutation;
  }
  const Scalarization f = resolve_scalarization(cfg.scalarization, b);

  const ZValue z = [&]() -> ZValue {
    if (cfg.method == "closed") return z_closed_form(f, b);
    if (cfg.method == "numeric") {
      return b.interval_kind() == IntervalKind::FiniteGrid
                 ? z_discrete(f, b)
                 : z_numeric(f, b, cfg.resolution, cfg.tol);
    }
    throw ConfigError("unknown zvalue method '" + cfg.method +
                      "' (expected closed|numeric)");
  }();

  ModeOutput out;
  out.summary = json{{"f", f.name()},
                     {"bounds", to_json(b)},
                     {"z", to_json(z)}};
  if (!applied_ordering.is_null()) {
    out.summary["canonical_permutation"] = applied_ordering;
  }
  return out;
}

ModeOutput mode_adversary(const ExperimentConfig& cfg) {
  const Bounds b = bounds_from_config(cfg);
  const Scalarization f = resolve_scalarization(cfg.scalarization, b);
  const ZValue z = cfg.method == "numeric"
                       ? z_numeric(f, b, cfg.resolution, cfg.tol)
                       : z_closed_form(f, b);
  const AdversaryGame game = build_adversary(f, b, z, cfg.tol);
  const PlayResult play =
      play_adversary(game, resolve_policy(cfg.policy, f, b), f);

  ModeOutput out;
  out.summary = json{{"f", f.name()},
                     {"policy", cfg.policy},
                     {"z", to_json(z)},
                     {"game", to_json(game)},
                     {"play", to_json(play)}};
  return out;
}

ModeOutput mode_verify(const ExperimentConfig& cfg) {
  if (cfg.grid_counts.empty()) {
    throw ConfigError("verify needs --grid g_1,...,g_k");
  }
  const Bounds b = bounds_from_config(cfg);
  const Scalarization f = resolve_scalarization(cfg.scalarization, b);
  const MinimaxResult mm = minimax_optimal_cr(f, b, cfg.horizon, cfg.budget);
  const double bpp_worst =
      game_worst_case_cr(f, b, cfg.horizon, bpp_policy(f, b), cfg.budget);

  std::ostringstream csv;
  csv << "history,decision\n";
  for (const auto& [history, accept] : mm.optimal_policy) {
    csv << '"';
    for (std::size_t t = 0; t < history.size(); ++t) {
      if (t) csv << '|';
      csv << csv_row(grid_point(b, history[t]));
    }
    csv << "\"," << (accept ? "accept" : "reject") << '\n';
  }

  ModeOutput out;
  out.summary = json{{"f", f.name()},
                     {"bounds", to_json(b)},
                     {"horizon", cfg.horizon},
                     {"minimax", to_json(mm)},
                     {"bpp_worst_cr", bpp_worst},
                     {"difference", std::abs(mm.value - bpp_worst)}};
  out.csv = csv.str();
  return out;
}

ModeOutput mode_sweep(const ExperimentConfig& cfg) {
  if (cfg.sweep_steps < 1) throw ConfigError("sweep needs --steps >= 1");
  if (!(cfg.phi_min > 1.0) || !(cfg.phi_max >= cfg.phi_min)) {
    throw ConfigError("sweep needs 1 < phi-min <= phi-max");
  }
  if (!(cfg.phi2_exponent >= 0.0 && cfg.phi2_exponent <= 1.0)) {
    throw ConfigError("phi2-exponent must lie in [0, 1]");
  }

  std::ostringstream csv;
  csv << "phi_1,phi_2,z_closed,z_numeric,empirical_worst_cr,instances\n";
  json rows = json::array();
  double worst_gap = 0.0;
  for (int s = 0; s < cfg.sweep_steps; ++s) {
    const double t = cfg.sweep_steps == 1
                         ? 0.0
                         : static_cast<double>(s) / (cfg.sweep_steps - 1);
    const double phi1 =
        cfg.phi_min * std::pow(cfg.phi_max / cfg.phi_min, t);
    const double phi2 = std::pow(phi1, cfg.phi2_exponent);
    const Bounds b = validate_bounds({1.0, 1.0}, {phi1, phi2});
    const Scalarization f = resolve_scalarization(cfg.scalarization, b);

    json closed;
    double closed_value = std::numeric_limits<double>::quiet_NaN();
    try {
      const ZValue zc = z_closed_form(f, b);
      closed_value = zc.value;
      closed = zc.value;
    } catch (const Error&) {
      // no closed form for this f/k; the numeric column still fills in
    }
    const ZValue zn = z_numeric(f, b, cfg.resolution, cfg.tol);

    double worst_cr = 1.0;
    const auto instances =
        generate_random_instances(b, cfg.horizon, cfg.count,
                                  cfg.seed + static_cast<std::uint64_t>(s));
    for (const auto& seq : instances) {
      const RunOutcome outcome = run_bpp(f, seq);
      worst_cr = std::max(
          worst_cr, competitive_ratio(f, outcome, pareto_maximal(seq)).value);
    }
    if (std::isfinite(closed_value)) {
      worst_gap = std::max(worst_gap, std::abs(zn.value - closed_value));
    }

    csv << format_real(phi1) << ',' << format_real(phi2) << ','
        << (std::isfinite(closed_value) ? format_real(closed_value) : "")
        << ',' << format_real(zn.value) << ',' << format_real(worst_cr) << ','
        << instances.size() << '\n';
    rows.push_back(json{{"phi_1", phi1},
                        {"phi_2", phi2},
                        {"z_closed", closed},
                        {"z_numeric", zn.value},
                        {"empirical_worst_cr", worst_cr},
                        {"instances", instances.size()}});
  }

  ModeOutput out;
  out.summary = json{{"f", cfg.scalarization},
                     {"steps", cfg.sweep_steps},
                     {"seed", cfg.seed},
                     {"max_closed_numeric_gap", worst_gap},
                     {"rows", std::move(rows)}};
  out.csv = csv.str();
  out.csv_is_primary = true;
  return out;
}

}  // namespace

Scalarization resolve_scalarization(const std::string& spec, const Bounds& b) {
  const int k = b.k();
  if (spec == "max") return Scalarization::worst_component(k);
  if (spec == "amean") return Scalarization::arithmetic_mean(k);
  if (spec == "gmean") return Scalarization::geometric_mean(k);
  if (spec == "min") return Scalarization::best_component(k);
  if (spec == "identity") {
    if (k != 1) throw ArityMismatch("identity is single-objective");
    return Scalarization::identity();
  }
  if (spec.rfind("plateau:c=", 0) == 0) {
    const std::string num = spec.substr(10);
    char* end = nullptr;
    const double c = std::strtod(num.c_str(), &end);
    if (num.empty() || end != num.c_str() + num.size()) {
      throw ConfigError("cannot parse plateau constant in '" + spec + "'");
    }
    return Scalarization::plateau_max(c, b);
  }
  throw ConfigError("unknown scalarization '" + spec +
                    "' (expected max|amean|gmean|min|plateau:c=<real>)");
}

int run_experiment(const ExperimentConfig& cfg, std::ostream& out,
                   std::ostream& err) {
  json meta{{"tool", "motss"},
            {"version", kVersion},
            {"mode", cfg.mode},
            {"seed", cfg.seed},
            {"timestamp", iso_timestamp()}};
  try {
    ModeOutput result;
    if (cfg.mode == "simulate") {
      result = mode_simulate(cfg);
    } else if (cfg.mode == "front") {
      result = mode_front(cfg);
    } else if (cfg.mode == "ratio") {
      result = mode_ratio(cfg);
    } else if (cfg.mode == "zvalue") {
      result = mode_zvalue(cfg);
    } else if (cfg.mode == "adversary") {
      result = mode_adversary(cfg);
    } else if (cfg.mode == "verify") {
      result = mode_verify(cfg);
    } else if (cfg.mode == "sweep") {
      result = mode_sweep(cfg);
    } else {
      throw ConfigError("unknown mode '" + cfg.mode + "'");
    }

    json document{{"meta", std::move(meta)}, {"result", result.summary}};
    if (result.csv_is_primary && !result.csv.empty()) {
      out << result.csv;
    } else {
      out << document.dump(2) << '\n';
    }
    if (!cfg.out_path.empty()) {
      std::ofstream file(cfg.out_path);
      if (!file) throw IoError("cannot write '" + cfg.out_path + "'");
      file << document.dump(2) << '\n';
      if (!result.csv.empty()) {
        const std::string csv_path = csv_sibling(cfg.out_path);
        std::ofstream csv_file(csv_path);
        if (!csv_file) throw IoError("cannot write '" + csv_path + "'");
        csv_file << result.csv;
      }
    }
    return 0;
  } catch (const Error& e) {
    const json failure{{"meta", std::move(meta)},
                       {"error", {{"type", e.code()}, {"message", e.what()}}}};
    out << failure.dump(2) << '\n';
    if (!cfg.out_path.empty()) {
      std::ofstream file(cfg.out_path);
      if (file) file << failure.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "unexpected error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace motss
