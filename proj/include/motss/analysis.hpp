#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "motss/algorithms.hpp"
#include "motss/bounds.hpp"
#include "motss/pareto.hpp"
#include "motss/scalarize.hpp"

namespace motss {

/// Per-instance competitive ratio: the value attained over the Pareto front,
/// the maximizing front member and the algorithm's returned price.
struct RatioReport {
  double value;
  PriceVector witness;
  PriceVector algorithm_return;
};

struct ZMethod {
  enum class Type { ClosedForm, NumericGrid, DiscreteEnumeration };
  Type type;
  std::string theorem;     // ClosedForm: which formula produced the value
  int resolution = 0;      // NumericGrid: grid points per free coordinate
  double tolerance = 0.0;  // NumericGrid: surface-membership tolerance

  std::string describe() const;
};

/// An optimal-competitive-ratio value with a witness on the balance surface
/// and the method that produced it. `auxiliary` carries named constants of
/// the derivation (e.g. L1/R1 for the arithmetic-mean formula).
struct ZValue {
  double value;
  PriceVector witness;
  ZMethod method;
  std::map<std::string, double> auxiliary;
};

/// value = max over front members x of f(x_1/ret_1,...,x_k/ret_k); ties keep
/// the first witness in the front's (lexicographic) iteration order.
RatioReport competitive_ratio(const Scalarization& f, const RunOutcome& outcome,
                              const ParetoFront& front);

/// Closed-form optimal ratios for the built-in scalarizations on
/// pre-canonicalized real-interval bounds (phi descending):
///   worst component   max{sqrt(phi_1), phi_2}   (k >= 2; k = 1 gives sqrt(phi))
///   arithmetic mean   (k = 2) 1/2*[sqrt({(phi_2-1)/2}^2 + phi_1) + (phi_2+1)/2]
///   geometric mean    (prod phi_i)^(1/2k)
///   best component    sqrt(phi_k)
/// Arithmetic mean with k >= 3 has no known closed form; use z_numeric.
ZValue z_closed_form(const Scalarization& f, const Bounds& b);

/// h(x) = f(M/x) - f(x/m); zero (within tolerance) iff x lies on the balance
/// surface.
double balance_residual(const Scalarization& f, const Bounds& b,
                        const PriceVector& x);

/// |f(M/x) - f(x/m)| <= tol * max(1, |f(M/x)|, |f(x/m)|).
bool on_surface(const Scalarization& f, const Bounds& b, const PriceVector& x,
                double tol);

/// Solves f(M_1/x_1, M_2/x_2, ...) = f(x_1/m_1, x_2/m_2, ...) for x_1 with
/// the tail coordinates fixed. The residual is nonincreasing in x_1, so a
/// log-space bisection over [m_1, M_1] finds a root when a sign change or
/// near-zero exists; on a plateau of zeros the converged bracket midpoint is
/// returned. Returns nothing when no root exists within tolerance.
std::optional<double> solve_fiber(const Scalarization& f, const Bounds& b,
                                  std::span<const double> tail, double tol);

/// Numeric oracle for z = sup over the balance surface of f(M/x) on
/// real-interval bounds: geometric grid over (x_2,...,x_k), fiber solve for
/// x_1, one halved-spacing refinement around the best cell. Requires a
/// continuous scalarization.
ZValue z_numeric(const Scalarization& f, const Bounds& b, int grid_resolution,
                 double tol = 1e-9);

/// Discrete variant for finite-grid bounds: maximum of f(M/x) over grid
/// points with exact residual equality. Kept separate from z_numeric because
/// the continuity argument behind the real-interval oracle does not apply.
ZValue z_discrete(const Scalarization& f, const Bounds& b);

}  // namespace motss
