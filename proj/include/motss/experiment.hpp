#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "motss/scalarize.hpp"

namespace motss {

/// One reproducible run of a harness mode. The seed fully determines any
/// randomized instance generation.
struct ExperimentConfig {
  std::string mode;  // simulate | front | ratio | zvalue | adversary | verify | sweep
  std::string scalarization;  // max | amean | gmean | min | plateau:c=<real> | identity
  std::vector<double> bounds_min;
  std::vector<double> bounds_max;
  bool canonicalize_bounds = false;
  std::string instance_path;
  std::string policy = "bpp";    // bpp | rpp | accept-first | reject-all
  std::string method = "closed";  // zvalue: closed | numeric
  int resolution = 512;
  double tol = 1e-9;
  long long budget = 1'000'000;
  int horizon = 2;
  std::vector<int> grid_counts;
  std::uint64_t seed = 0;
  int count = 100;        // sweep: random instances per bound pair
  int sweep_steps = 16;   // sweep: bound pairs
  double phi_min = 1.1;
  double phi_max = 100.0;
  double phi2_exponent = 1.0;  // sweep: phi_2 = phi_1 ^ exponent
  std::string out_path;  // optional JSON summary (CSV detail lands beside it)
};

/// Runs one mode: the primary artifact goes to `out` (CSV for simulate/front/
/// sweep, JSON otherwise); --out additionally writes the JSON summary and a
/// CSV detail file. Returns the process exit code; domain errors print a
/// machine-readable error JSON and return nonzero.
int run_experiment(const ExperimentConfig& cfg, std::ostream& out,
                   std::ostream& err);

/// Resolves the CLI scalarization spelling for a given arity; plateau needs
/// single-objective bounds to validate its constant.
Scalarization resolve_scalarization(const std::string& spec, const Bounds& b);

}  // namespace motss
