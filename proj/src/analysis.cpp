#include "motss/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "motss/errors.hpp"

namespace motss {

namespace {

constexpr int kBisectionIterations = 90;

void require_arity(const Scalarization& f, const Bounds& b) {
  if (f.arity() != b.k()) {
    throw ArityMismatch("scalarization arity " + std::to_string(f.arity()) +
                        " does not match " + std::to_string(b.k()) +
                        " objectives");
  }
}

double residual_scale(double lhs, double rhs) {
  return std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

// Evaluator for both sides of the balance equation with one coordinate free.
// `eval(x1) -> {f(M/x), f(x/m)}` where x = (x1, tail...).
using FiberSides = std::function<std::pair<double, double>(double)>;

std::optional<double> bisect_fiber(const FiberSides& sides, double lo,
                                   double hi, double tol) {
  auto residual_ok = [&](const std::pair<double, double>& s) {
    return std::abs(s.first - s.second) <= tol * residual_scale(s.first,
                                                                s.second);
  };
  auto h = [&](const std::pair<double, double>& s) {
    return s.first - s.second;
  };

  const auto at_lo = sides(lo);
  if (lo == hi) return residual_ok(at_lo) ? std::optional<double>(lo)
                                          : std::nullopt;
  const auto at_hi = sides(hi);
  // h is nonincreasing: its maximum sits at lo and its minimum at hi.
  if (h(at_lo) < 0.0) {
    return residual_ok(at_lo) ? std::optional<double>(lo) : std::nullopt;
  }
  if (h(at_hi) > 0.0) {
    return residual_ok(at_hi) ? std::optional<double>(hi) : std::nullopt;
  }

  double log_lo = std::log(lo);
  double log_hi = std::log(hi);
  for (int it = 0; it < kBisectionIterations; ++it) {
    const double log_mid = 0.5 * (log_lo + log_hi);
    const double mid = std::exp(log_mid);
    if (h(sides(mid)) >= 0.0) {
      log_lo = log_mid;
    } else {
      log_hi = log_mid;
    }
  }
  const double mid = std::exp(0.5 * (log_lo + log_hi));
  const auto at_mid = sides(mid);
  if (!residual_ok(at_mid)) return std::nullopt;
  return mid;
}

// Geometric grid over [lo, hi] with `count` points, endpoints exact, plus
// sqrt(lo*hi): the geometric-mean coordinate always balances, and for the
// best-component measure the supremum is pinned there.
std::vector<double> geometric_axis(double lo, double hi, int count) {
  std::vector<double> pts;
  if (lo == hi) {
    pts.push_back(lo);
    return pts;
  }
  pts.reserve(static_cast<std::size_t>(count) + 1);
  const double step = std::log(hi / lo) / (count - 1);
  for (int j = 0; j < count; ++j) {
    pts.push_back(j == 0 ? lo : (j == count - 1 ? hi : lo * std::exp(step * j)));
  }
  pts.push_back(std::sqrt(lo * hi));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

struct SurfaceSearch {
  bool found = false;
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> witness;  // original orientation
  long long fibers = 0;
  long long surface_points = 0;
};

}  // namespace

std::string ZMethod::describe() const {
  std::ostringstream os;
  switch (type) {
    case Type::ClosedForm:
      os << "closed_form(" << theorem << ")";
      break;
    case Type::NumericGrid:
      os << "numeric_grid(resolution=" << resolution << ", tol=" << tolerance
         << ")";
      break;
    case Type::DiscreteEnumeration:
      os << "discrete_enumeration(points=" << resolution << ")";
      break;
  }
  return os.str();
}

RatioReport competitive_ratio(const Scalarization& f, const RunOutcome& outcome,
                              const ParetoFront& front) {
  if (front.members.empty()) {
    throw EmptyFront("competitive ratio needs a nonempty Pareto front");
  }
  const int k = f.arity();
  if (outcome.returned.k() != k || front.members.front().k() != k) {
    throw ArityMismatch("outcome/front arity does not match scalarization");
  }
  for (int i = 0; i < k; ++i) {
    if (!(outcome.returned[i] > 0.0)) {
      throw NonPositiveInput("algorithm return must be positive");
    }
  }

  std::vector<double> quotient(static_cast<std::size_t>(k));
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  for (std::size_t j = 0; j < front.members.size(); ++j) {
    for (int i = 0; i < k; ++i) {
      quotient[static_cast<std::size_t>(i)] =
          front.members[j][i] / outcome.returned[i];
    }
    const double v = f(quotient);
    if (v > best) {
      best = v;
      best_index = j;
    }
  }
  return RatioReport{best, front.members[best_index], outcome.returned};
}

double balance_residual(const Scalarization& f, const Bounds& b,
                        const PriceVector& x) {
  require_arity(f, b);
  const int k = b.k();
  std::vector<double> upside(static_cast<std::size_t>(k));
  std::vector<double> downside(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    upside[static_cast<std::size_t>(i)] = b.max_price(i) / x[i];
    downside[static_cast<std::size_t>(i)] = x[i] / b.min_price(i);
  }
  return f(upside) - f(downside);
}

bool on_surface(const Scalarization& f, const Bounds& b, const PriceVector& x,
                double tol) {
  require_arity(f, b);
  const int k = b.k();
  std::vector<double> upside(static_cast<std::size_t>(k));
  std::vector<double> downside(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    upside[static_cast<std::size_t>(i)] = b.max_price(i) / x[i];
    downside[static_cast<std::size_t>(i)] = x[i] / b.min_price(i);
  }
  const double lhs = f(upside);
  const double rhs = f(downside);
  return std::abs(lhs - rhs) <= tol * residual_scale(lhs, rhs);
}

ZValue z_closed_form(const Scalarization& f, const Bounds& b) {
  require_arity(f, b);
  if (b.interval_kind() != IntervalKind::Real) {
    throw NotRealInterval(
        "closed forms hold for real intervals; use z_discrete for grids");
  }
  if (!b.is_canonical()) {
    throw NotCanonical(
        "closed forms expect bounds sorted by fluctuation ratio; "
        "canonicalize first");
  }
  const int k = b.k();
  auto geometric_point = [&]() {
    std::vector<double> w(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      w[static_cast<std::size_t>(i)] =
          std::sqrt(b.min_price(i) * b.max_price(i));
    }
    return w;
  };

  switch (f.kind()) {
    case Scalarization::Kind::Identity:
      return ZValue{std::sqrt(b.fluctuation(0)),
                    PriceVector(geometric_point(), b),
                    {ZMethod::Type::ClosedForm, "single_objective"},
                    {}};
    case Scalarization::Kind::WorstComponent: {
      if (k == 1) {
        return ZValue{std::sqrt(b.fluctuation(0)),
                      PriceVector(geometric_point(), b),
                      {ZMethod::Type::ClosedForm, "single_objective"},
                      {}};
      }
      const double root_phi1 = std::sqrt(b.fluctuation(0));
      const double phi2 = b.fluctuation(1);
      if (root_phi1 >= phi2) {
        return ZValue{root_phi1,
                      PriceVector(geometric_point(), b),
                      {ZMethod::Type::ClosedForm, "worst_component"},
                      {{"case", 1.0}}};
      }
      std::vector<double> w = geometric_point();
      w[0] = b.max_price(0) * b.min_price(1) / b.max_price(1);
      w[1] = b.max_price(1);
      return ZValue{phi2,
                    PriceVector(std::move(w), b),
                    {ZMethod::Type::ClosedForm, "worst_component"},
                    {{"case", 2.0}}};
    }
    case Scalarization::Kind::ArithmeticMean: {
      if (k == 1) {
        return ZValue{std::sqrt(b.fluctuation(0)),
                      PriceVector(geometric_point(), b),
                      {ZMethod::Type::ClosedForm, "single_objective"},
                      {}};
      }
      if (k > 2) {
        throw UnsupportedArity(
            "no closed form is known for the arithmetic mean with k >= 3; "
            "use z_numeric");
      }
      const double phi1 = b.fluctuation(0);
      const double phi2 = b.fluctuation(1);
      const double half_gap = 0.5 * (phi2 - 1.0);
      const double root = std::sqrt(half_gap * half_gap + phi1);
      const double value = 0.5 * (root + 0.5 * (phi2 + 1.0));
      const double m1 = b.min_price(0);
      const double disc = std::sqrt(0.25 * m1 * m1 * (phi2 - 1.0) * (phi2 - 1.0) +
                                    m1 * b.max_price(0));
      const double l1 = -0.5 * m1 * (phi2 - 1.0) + disc;
      const double r1 = 0.5 * m1 * (phi2 - 1.0) + disc;
      std::vector<double> w = {std::clamp(l1, m1, b.max_price(0)),
                               b.max_price(1)};
      return ZValue{value,
                    PriceVector(std::move(w), b),
                    {ZMethod::Type::ClosedForm, "arithmetic_mean_k2"},
                    {{"L1", l1}, {"R1", r1}}};
    }
    case Scalarization::Kind::GeometricMean: {
      double s = 0.0;
      for (int i = 0; i < k; ++i) s += std::log(b.fluctuation(i));
      return ZValue{std::exp(s / (2.0 * k)),
                    PriceVector(geometric_point(), b),
                    {ZMethod::Type::ClosedForm, "geometric_mean"},
                    {}};
    }
    case Scalarization::Kind::BestComponent:
      return ZValue{std::sqrt(b.fluctuation(k - 1)),
                    PriceVector(geometric_point(), b),
                    {ZMethod::Type::ClosedForm, "best_component"},
                    {}};
    case Scalarization::Kind::PlateauMax:
    case Scalarization::Kind::Custom:
      throw UnsupportedScalarization(
          "no closed form for '" + f.name() + "'; use z_numeric");
  }
  throw InvalidParameter("unknown scalarization kind");
}

std::optional<double> solve_fiber(const Scalarization& f, const Bounds& b,
                                  std::span<const double> tail, double tol) {
  require_arity(f, b);
  if (!(tol > 0.0)) {
    throw ToleranceNotPositive("tolerance must be positive");
  }
  const int k = b.k();
  if (tail.size() + 1 != static_cast<std::size_t>(k)) {
    throw ArityMismatch("tail must fix coordinates 2..k");
  }
  for (std::size_t i = 0; i < tail.size(); ++i) {
    const int obj = static_cast<int>(i) + 1;
    if (!(b.min_price(obj) <= tail[i] && tail[i] <= b.max_price(obj))) {
      throw OutOfBounds("tail coordinate outside its interval");
    }
  }

  std::vector<double> upside(static_cast<std::size_t>(k));
  std::vector<double> downside(static_cast<std::size_t>(k));
  for (int i = 1; i < k; ++i) {
    upside[static_cast<std::size_t>(i)] = b.max_price(i) / tail[i - 1];
    downside[static_cast<std::size_t>(i)] = tail[i - 1] / b.min_price(i);
  }
  FiberSides sides = [&](double x1) {
    upside[0] = b.max_price(0) / x1;
    downside[0] = x1 / b.min_price(0);
    return std::make_pair(f(upside), f(downside));
  };
  return bisect_fiber(sides, b.min_price(0), b.max_price(0), tol);
}

ZValue z_numeric(const Scalarization& f, const Bounds& b, int grid_resolution,
                 double tol) {
  require_arity(f, b);
  if (b.interval_kind() != IntervalKind::Real) {
    throw NotRealInterval("z_numeric runs on real intervals; use z_discrete");
  }
  if (!f.continuous()) {
    throw DiscontinuousScalarization(
        "the balance-surface supremum characterizes the optimum only for "
        "continuous scalarizations");
  }
  if (grid_resolution < 2) {
    throw InvalidParameter("grid resolution must be >= 2");
  }
  if (!(tol > 0.0)) {
    throw ToleranceNotPositive("tolerance must be positive");
  }
  const int k = b.k();

  // Work in the canonical orientation (phi descending) where the suprema of
  // the built-ins sit on grid fibers; f is fed original-order arguments
  // through the permutation, and the witness is mapped back.
  auto [bc, ordering] = canonicalize(b);
  std::vector<double> up_orig(static_cast<std::size_t>(k));
  std::vector<double> down_orig(static_cast<std::size_t>(k));
  std::vector<double> x_canon(static_cast<std::size_t>(k));
  auto sides_at = [&](const std::vector<double>& xc) {
    for (int pos = 0; pos < k; ++pos) {
      const auto orig = static_cast<std::size_t>(ordering.permutation[pos]);
      up_orig[orig] = bc.max_price(pos) / xc[static_cast<std::size_t>(pos)];
      down_orig[orig] = xc[static_cast<std::size_t>(pos)] / bc.min_price(pos);
    }
    return std::make_pair(f(up_orig), f(down_orig));
  };

  SurfaceSearch search;
  auto try_tail = [&](const std::vector<double>& tail) {
    ++search.fibers;
    for (int i = 1; i < k; ++i) {
      x_canon[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i - 1)];
    }
    FiberSides sides = [&](double x1) {
      x_canon[0] = x1;
      return sides_at(x_canon);
    };
    const auto root = bisect_fiber(sides, bc.min_price(0), bc.max_price(0), tol);
    if (!root) return;
    ++search.surface_points;
    x_canon[0] = *root;
    const double v = sides_at(x_canon).first;
    std::vector<double> witness = ordering.inverse(x_canon);
    if (!search.found || v > search.value ||
        (v == search.value && lexicographic_less(witness, search.witness))) {
      search.found = true;
      search.value = v;
      search.witness = std::move(witness);
    }
  };

  std::vector<std::vector<double>> axes(static_cast<std::size_t>(k - 1));
  for (int i = 1; i < k; ++i) {
    axes[static_cast<std::size_t>(i - 1)] =
        geometric_axis(bc.min_price(i), bc.max_price(i), grid_resolution);
  }

  std::vector<std::size_t> best_cell(axes.size(), 0);
  auto sweep = [&](const std::vector<std::vector<double>>& grid,
                   bool remember_best) {
    std::vector<std::size_t> idx(grid.size(), 0);
    std::vector<double> tail(grid.size());
    while (true) {
      for (std::size_t d = 0; d < grid.size(); ++d) tail[d] = grid[d][idx[d]];
      const double before = search.value;
      try_tail(tail);
      if (remember_best && search.found && search.value > before) {
        best_cell = idx;
      }
      std::size_t d = 0;
      for (; d < grid.size(); ++d) {
        if (++idx[d] < grid[d].size()) break;
        idx[d] = 0;
      }
      if (d == grid.size()) break;
    }
  };

  if (k == 1) {
    try_tail({});
  } else {
    sweep(axes, true);
    if (search.found) {
      // One refinement pass: halved spacing around the best cell.
      std::vector<std::vector<double>> refined(axes.size());
      for (std::size_t d = 0; d < axes.size(); ++d) {
        const auto& axis = axes[d];
        const std::size_t j = best_cell[d];
        const std::size_t lo = j > 0 ? j - 1 : j;
        const std::size_t hi = j + 1 < axis.size() ? j + 1 : j;
        std::vector<double> pts;
        for (std::size_t a = lo; a <= hi; ++a) {
          pts.push_back(axis[a]);
          if (a + 1 <= hi) pts.push_back(std::sqrt(axis[a] * axis[a + 1]));
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        refined[d] = std::move(pts);
      }
      sweep(refined, false);
    }
  }

  if (!search.found) {
    throw NoSurfacePointFound(
        "no balance-surface point met the tolerance; the geometric-mean "
        "point always balances, so the tolerance is pathological");
  }
  return ZValue{search.value,
                PriceVector(search.witness, b),
                {ZMethod::Type::NumericGrid, "", grid_resolution, tol},
                {{"fibers", static_cast<double>(search.fibers)},
                 {"surface_points", static_cast<double>(search.surface_points)}}};
}

ZValue z_discrete(const Scalarization& f, const Bounds& b) {
  require_arity(f, b);
  if (b.interval_kind() != IntervalKind::FiniteGrid) {
    throw NotFiniteGrid("z_discrete enumerates finite price grids");
  }
  const int k = b.k();
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  std::vector<double> x(static_cast<std::size_t>(k));
  std::vector<double> upside(static_cast<std::size_t>(k));
  std::vector<double> downside(static_cast<std::size_t>(k));
  bool found = false;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> witness;
  long long points = 0;
  while (true) {
    for (int i = 0; i < k; ++i) {
      x[static_cast<std::size_t>(i)] = b.grid(i)[idx[static_cast<std::size_t>(i)]];
      upside[static_cast<std::size_t>(i)] =
          b.max_price(i) / x[static_cast<std::size_t>(i)];
      downside[static_cast<std::size_t>(i)] =
          x[static_cast<std::size_t>(i)] / b.min_price(i);
    }
    ++points;
    const double lhs = f(upside);
    const double rhs = f(downside);
    if (lhs == rhs) {  // exact membership; grid points are inputs
      if (!found || lhs > best ||
          (lhs == best && lexicographic_less(x, witness))) {
        found = true;
        best = lhs;
        witness = x;
      }
    }
    int d = 0;
    for (; d < k; ++d) {
      if (++idx[static_cast<std::size_t>(d)] <
          b.grid(d).size()) break;
      idx[static_cast<std::size_t>(d)] = 0;
    }
    if (d == k) break;
  }
  if (!found) {
    throw NoSurfacePointFound("no grid point balances exactly");
  }
  ZMethod method{ZMethod::Type::DiscreteEnumeration, ""};
  method.resolution = static_cast<int>(std::min<long long>(
      points, std::numeric_limits<int>::max()));
  return ZValue{best, PriceVector(witness, b), method, {}};
}

}  // namespace motss
