#pragma once

#include <map>
#include <vector>

#include "motss/algorithms.hpp"
#include "motss/analysis.hpp"
#include "motss/bounds.hpp"

namespace motss {

/// The two-move lower-bound game: reveal a balance-surface witness; if the
/// player accepts, continue with p_max, otherwise stop.
struct AdversaryGame {
  Bounds bounds;
  PriceVector probe;                  // x* on the balance surface
  PriceVector continuation_on_accept;  // p_max
};

struct PlayResult {
  InputSequence realized;
  RunOutcome outcome;
  RatioReport report;
};

/// Best worst-case competitive ratio achievable by any deterministic online
/// policy on the finite instance space, with the minimizing decision table.
/// Table keys are histories of grid-point indices (row-major over the
/// per-objective grids); values are accept decisions.
struct MinimaxResult {
  double value;
  std::map<std::vector<int>, bool> optimal_policy;
  long long instance_space_size;
};

/// probe = z.witness (must balance within `tol`); continuation = p_max.
AdversaryGame build_adversary(const Scalarization& f, const Bounds& b,
                              const ZValue& z, double tol = 1e-9);

/// Plays the game against a policy: acceptance realizes (probe, p_max) and
/// yields CR = f(M/probe); rejection realizes (probe) and yields
/// CR = f(probe/m). Both are computed through the offline front and the
/// per-instance ratio.
PlayResult play_adversary(const AdversaryGame& game, const Policy& policy,
                          const Scalarization& f);

/// All sequences of length 1..horizon over the price grid, lexicographic
/// (shorter first, then row-major point order).
std::vector<InputSequence> enumerate_instances(const Bounds& b, int horizon,
                                               long long budget = 1'000'000);

/// Exhaustive minimax over deterministic history-indexed decision tables via
/// backward induction: acceptance is answered by the p_max completion (the
/// front collapses to {p_max}); rejection lets the adversary stop (return
/// p_min) or reveal any next grid point, up to the horizon.
MinimaxResult minimax_optimal_cr(const Scalarization& f, const Bounds& b,
                                 int horizon, long long budget = 1'000'000);

/// Worst-case competitive ratio of one fixed policy in the same game tree
/// minimax_optimal_cr evaluates; comparable to MinimaxResult.value.
double game_worst_case_cr(const Scalarization& f, const Bounds& b, int horizon,
                          const Policy& policy, long long budget = 1'000'000);

/// Grid point for a row-major index (helper for decoding policy tables).
std::vector<double> grid_point(const Bounds& b, int flat_index);

}  // namespace motss
