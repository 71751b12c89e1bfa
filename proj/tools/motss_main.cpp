// Command-line harness for the multi-objective time series search library:
// online policy simulation, Pareto fronts, optimal competitive ratios
// (closed-form and numeric), adversarial lower bounds, and desk-scale
// optimality verification.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "motss/errors.hpp"
#include "motss/experiment.hpp"

namespace {

std::vector<double> parse_csv_doubles(const std::string& field) {
  std::vector<double> out;
  std::string token;
  std::istringstream ss(field);
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("cannot parse '" + token + "' as a number");
    }
  }
  return out;
}

std::vector<int> parse_csv_ints(const std::string& field) {
  std::vector<int> out;
  for (double v : parse_csv_doubles(field)) out.push_back(static_cast<int>(v));
  return out;
}

void add_common(CLI::App* sub, motss::ExperimentConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "RNG seed");
  sub->add_option("--out", cfg.out_path,
                  "write the JSON summary here (CSV detail lands beside it)");
  sub->add_option("--tol", cfg.tol, "numeric tolerance");
  sub->add_option("--resolution", cfg.resolution,
                  "grid resolution for the numeric oracle");
  sub->add_option("--budget", cfg.budget, "history-node budget");
}

void add_f(CLI::App* sub, motss::ExperimentConfig& cfg) {
  sub->add_option("--f", cfg.scalarization,
                  "scalarization: max|amean|gmean|min|plateau:c=<real>|identity")
      ->required();
}

void add_bounds(CLI::App* sub, motss::ExperimentConfig& cfg,
                std::vector<std::string>& raw) {
  sub->add_option("--bounds", raw,
                  "price intervals: m_1,...,m_k M_1,...,M_k")
      ->expected(2)
      ->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-objective time series search harness"};
  app.require_subcommand(1);

  motss::ExperimentConfig cfg;
  std::vector<std::string> raw_bounds;
  std::string raw_grid;

  auto* simulate = app.add_subcommand(
      "simulate", "run an online policy over an instance file");
  add_f(simulate, cfg);
  simulate->add_option("--instance", cfg.instance_path, "instance file")
      ->required();
  simulate->add_option("--policy", cfg.policy,
                       "bpp|rpp|accept-first|reject-all");
  add_common(simulate, cfg);

  auto* front =
      app.add_subcommand("front", "Pareto-maximal prices of an instance");
  front->add_option("--instance", cfg.instance_path, "instance file")
      ->required();
  add_common(front, cfg);

  auto* ratio = app.add_subcommand(
      "ratio", "per-instance competitive ratio of a policy");
  add_f(ratio, cfg);
  ratio->add_option("--instance", cfg.instance_path, "instance file")
      ->required();
  ratio->add_option("--policy", cfg.policy, "bpp|rpp|accept-first|reject-all");
  add_common(ratio, cfg);

  auto* zvalue = app.add_subcommand(
      "zvalue", "optimal competitive ratio for given bounds");
  add_f(zvalue, cfg);
  add_bounds(zvalue, cfg, raw_bounds);
  zvalue->add_option("--method", cfg.method, "closed|numeric");
  zvalue->add_flag("--canonicalize", cfg.canonicalize_bounds,
                   "sort objectives by fluctuation ratio first");
  zvalue->add_option("--grid", raw_grid,
                     "treat bounds as finite grids with these point counts");
  add_common(zvalue, cfg);

  auto* adversary = app.add_subcommand(
      "adversary", "play the lower-bound game against a policy");
  add_f(adversary, cfg);
  add_bounds(adversary, cfg, raw_bounds);
  adversary->add_option("--policy", cfg.policy,
                        "bpp|rpp|accept-first|reject-all");
  adversary->add_option("--method", cfg.method,
                        "witness source: closed|numeric");
  add_common(adversary, cfg);

  auto* verify = app.add_subcommand(
      "verify", "exhaustive minimax vs BPP on a finite grid");
  add_f(verify, cfg);
  add_bounds(verify, cfg, raw_bounds);
  verify->add_option("--grid", raw_grid, "points per objective: g_1,...,g_k")
      ->required();
  verify->add_option("--horizon", cfg.horizon, "maximum sequence length");
  add_common(verify, cfg);

  auto* sweep = app.add_subcommand(
      "sweep", "tabulate z values and empirical worst ratios over bound pairs");
  add_f(sweep, cfg);
  sweep->add_option("--steps", cfg.sweep_steps, "number of bound pairs");
  sweep->add_option("--phi-min", cfg.phi_min, "smallest phi_1");
  sweep->add_option("--phi-max", cfg.phi_max, "largest phi_1");
  sweep->add_option("--phi2-exponent", cfg.phi2_exponent,
                    "phi_2 = phi_1 ^ exponent, in [0, 1]");
  sweep->add_option("--count", cfg.count, "random instances per pair");
  sweep->add_option("--horizon", cfg.horizon, "maximum instance length");
  add_common(sweep, cfg);

  CLI11_PARSE(app, argc, argv);

  for (auto* sub : {simulate, front, ratio, zvalue, adversary, verify, sweep}) {
    if (sub->parsed()) cfg.mode = sub->get_name();
  }
  if (!raw_bounds.empty()) {
    cfg.bounds_min = parse_csv_doubles(raw_bounds[0]);
    cfg.bounds_max = parse_csv_doubles(raw_bounds[1]);
  }
  if (!raw_grid.empty()) cfg.grid_counts = parse_csv_ints(raw_grid);

  return motss::run_experiment(cfg, std::cout, std::cerr);
}
