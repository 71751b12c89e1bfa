#include "motss/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "motss/errors.hpp"
#include "motss/pareto.hpp"

namespace motss {

namespace {

void require_arity(const Scalarization& f, const Bounds& b) {
  if (f.arity() != b.k()) {
    throw ArityMismatch("scalarization arity does not match bounds");
  }
}

long long count_history_nodes(const Bounds& b, int horizon, long long budget) {
  const long long g = b.grid_point_count();
  long long total = 0;
  long long layer = 1;
  for (int t = 1; t <= horizon; ++t) {
    if (layer > budget / g) {
      throw BudgetExceeded("instance space exceeds the node budget of " +
                           std::to_string(budget));
    }
    layer *= g;
    total += layer;
    if (total > budget) {
      throw BudgetExceeded("instance space exceeds the node budget of " +
                           std::to_string(budget));
    }
  }
  return total;
}

struct GameContext {
  const Scalarization& f;
  const Bounds& bounds;
  int horizon;
  std::vector<std::vector<double>> points;     // row-major grid points
  std::vector<double> accept_value;            // f(M/p) per point
  std::vector<double> stop_term;               // f(p/m) per point
};

GameContext make_context(const Scalarization& f, const Bounds& b,
                         int horizon) {
  require_arity(f, b);
  if (b.interval_kind() != IntervalKind::FiniteGrid) {
    throw NotFiniteGrid("the exhaustive oracle needs finite price grids");
  }
  if (horizon < 1) {
    throw InvalidParameter("horizon must be >= 1");
  }
  GameContext ctx{f, b, horizon, {}, {}, {}};
  const long long n = b.grid_point_count();
  ctx.points.reserve(static_cast<std::size_t>(n));
  ctx.accept_value.reserve(static_cast<std::size_t>(n));
  ctx.stop_term.reserve(static_cast<std::size_t>(n));
  const int k = b.k();
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  std::vector<double> p(static_cast<std::size_t>(k));
  std::vector<double> up(static_cast<std::size_t>(k));
  std::vector<double> down(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) {
      p[static_cast<std::size_t>(i)] = b.grid(i)[idx[static_cast<std::size_t>(i)]];
      up[static_cast<std::size_t>(i)] =
          b.max_price(i) / p[static_cast<std::size_t>(i)];
      down[static_cast<std::size_t>(i)] =
          p[static_cast<std::size_t>(i)] / b.min_price(i);
    }
    ctx.points.push_back(p);
    ctx.accept_value.push_back(f(up));
    ctx.stop_term.push_back(f(down));
    // row-major: the last objective varies fastest
    int d = k - 1;
    for (; d >= 0; --d) {
      if (++idx[static_cast<std::size_t>(d)] < b.grid(d).size()) break;
      idx[static_cast<std::size_t>(d)] = 0;
    }
    if (d < 0) break;
  }
  return ctx;
}

// Backward induction with the policy decision left free (minimax) or fixed
// (evaluation of a given decision table / callable).
double minimax_node(const GameContext& ctx, std::vector<int>& history,
                    double stop_cr, std::map<std::vector<int>, bool>* table) {
  const int point = history.back();
  const double accept = ctx.accept_value[static_cast<std::size_t>(point)];
  const double stop =
      std::max(stop_cr, ctx.stop_term[static_cast<std::size_t>(point)]);
  double reject = stop;
  if (static_cast<int>(history.size()) < ctx.horizon) {
    for (std::size_t q = 0; q < ctx.points.size(); ++q) {
      history.push_back(static_cast<int>(q));
      reject = std::max(reject, minimax_node(ctx, history, stop, table));
      history.pop_back();
    }
  }
  if (table != nullptr) {
    (*table)[history] = accept <= reject;
  }
  return std::min(accept, reject);
}

double policy_node(const GameContext& ctx, const Policy& policy,
                   std::vector<PriceVector>& revealed, std::vector<int>& history,
                   double stop_cr) {
  const int point = history.back();
  std::span<const PriceVector> prefix(revealed.data(), revealed.size() - 1);
  if (policy(prefix, revealed.back())) {
    return ctx.accept_value[static_cast<std::size_t>(point)];
  }
  const double stop =
      std::max(stop_cr, ctx.stop_term[static_cast<std::size_t>(point)]);
  double worst = stop;
  if (static_cast<int>(history.size()) < ctx.horizon) {
    for (std::size_t q = 0; q < ctx.points.size(); ++q) {
      history.push_back(static_cast<int>(q));
      revealed.emplace_back(ctx.points[q], ctx.bounds);
      worst = std::max(worst, policy_node(ctx, policy, revealed, history, stop));
      revealed.pop_back();
      history.pop_back();
    }
  }
  return worst;
}

}  // namespace

AdversaryGame build_adversary(const Scalarization& f, const Bounds& b,
                              const ZValue& z, double tol) {
  require_arity(f, b);
  if (!on_surface(f, b, z.witness, tol)) {
    throw WitnessOffSurface("z witness does not balance within tolerance");
  }
  return AdversaryGame{b, z.witness, PriceVector::max_of(b)};
}

PlayResult play_adversary(const AdversaryGame& game, const Policy& policy,
                          const Scalarization& f) {
  require_arity(f, game.bounds);
  const bool accepts = policy({}, game.probe);
  std::vector<PriceVector> prices;
  prices.push_back(game.probe);
  if (accepts) prices.push_back(game.continuation_on_accept);
  InputSequence realized(std::make_shared<Bounds>(game.bounds),
                         std::move(prices));
  RunOutcome outcome = run_generic(policy, realized);
  RatioReport report = competitive_ratio(f, outcome, pareto_maximal(realized));
  return PlayResult{std::move(realized), std::move(outcome),
                    std::move(report)};
}

std::vector<InputSequence> enumerate_instances(const Bounds& b, int horizon,
                                               long long budget) {
  if (b.interval_kind() != IntervalKind::FiniteGrid) {
    throw NotFiniteGrid("instance enumeration needs finite price grids");
  }
  if (horizon < 1) {
    throw InvalidParameter("horizon must be >= 1");
  }
  const long long total = count_history_nodes(b, horizon, budget);

  const int k = b.k();
  const long long g = b.grid_point_count();
  std::vector<std::vector<double>> points;
  points.reserve(static_cast<std::size_t>(g));
  {
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    std::vector<double> p(static_cast<std::size_t>(k));
    while (true) {
      for (int i = 0; i < k; ++i) {
        p[static_cast<std::size_t>(i)] =
            b.grid(i)[idx[static_cast<std::size_t>(i)]];
      }
      points.push_back(p);
      int d = k - 1;
      for (; d >= 0; --d) {
        if (++idx[static_cast<std::size_t>(d)] < b.grid(d).size()) break;
        idx[static_cast<std::size_t>(d)] = 0;
      }
      if (d < 0) break;
    }
  }

  auto shared = std::make_shared<const Bounds>(b);
  std::vector<InputSequence> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> sel;
  for (int len = 1; len <= horizon; ++len) {
    sel.assign(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<PriceVector> prices;
      prices.reserve(static_cast<std::size_t>(len));
      for (int t = 0; t < len; ++t) {
        prices.emplace_back(points[static_cast<std::size_t>(sel[static_cast<std::size_t>(t)])],
                            *shared);
      }
      out.emplace_back(shared, std::move(prices));
      int d = len - 1;
      for (; d >= 0; --d) {
        if (++sel[static_cast<std::size_t>(d)] < static_cast<int>(g)) break;
        sel[static_cast<std::size_t>(d)] = 0;
      }
      if (d < 0) break;
    }
  }
  return out;
}

MinimaxResult minimax_optimal_cr(const Scalarization& f, const Bounds& b,
                                 int horizon, long long budget) {
  require_arity(f, b);
  const long long total = count_history_nodes(b, horizon, budget);
  GameContext ctx = make_context(f, b, horizon);
  MinimaxResult result;
  result.instance_space_size = total;
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double value = kNegInf;
  std::vector<int> history;
  for (std::size_t p = 0; p < ctx.points.size(); ++p) {
    history.push_back(static_cast<int>(p));
    value = std::max(value, minimax_node(ctx, history, kNegInf,
                                         &result.optimal_policy));
    history.pop_back();
  }
  result.value = value;
  return result;
}

double game_worst_case_cr(const Scalarization& f, const Bounds& b, int horizon,
                          const Policy& policy, long long budget) {
  require_arity(f, b);
  count_history_nodes(b, horizon, budget);
  GameContext ctx = make_context(f, b, horizon);
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double value = kNegInf;
  std::vector<int> history;
  std::vector<PriceVector> revealed;
  for (std::size_t p = 0; p < ctx.points.size(); ++p) {
    history.push_back(static_cast<int>(p));
    revealed.emplace_back(ctx.points[p], b);
    value = std::max(value, policy_node(ctx, policy, revealed, history, kNegInf));
    revealed.pop_back();
    history.pop_back();
  }
  return value;
}

std::vector<double> grid_point(const Bounds& b, int flat_index) {
  const int k = b.k();
  std::vector<double> p(static_cast<std::size_t>(k));
  long long rest = flat_index;
  for (int i = k - 1; i >= 0; --i) {
    const auto& g = b.grid(i);
    p[static_cast<std::size_t>(i)] =
        g[static_cast<std::size_t>(rest % static_cast<long long>(g.size()))];
    rest /= static_cast<long long>(g.size());
  }
  return p;
}

}  // namespace motss
