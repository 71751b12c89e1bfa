#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "motss/bounds.hpp"

namespace motss {

/// Monotone scalarization f: R^k -> R collapsing per-objective ratios into a
/// single competitive-ratio figure. Built-ins: worst component (max),
/// arithmetic mean, geometric mean, best component (min), the single-objective
/// plateau-max g(x) = max(x, c*sqrt(M/m)), and the identity. Custom monotone
/// functions plug in through the same evaluation contract.
class Scalarization {
 public:
  enum class Kind {
    WorstComponent,
    ArithmeticMean,
    GeometricMean,
    BestComponent,
    PlateauMax,
    Identity,
    Custom,
  };

  static Scalarization worst_component(int k);
  static Scalarization arithmetic_mean(int k);
  static Scalarization geometric_mean(int k);
  static Scalarization best_component(int k);
  /// Requires single-objective bounds and 1 < c < sqrt(M/m).
  static Scalarization plateau_max(double c, const Bounds& bounds);
  static Scalarization identity();
  static Scalarization custom(int k,
                              std::function<double(std::span<const double>)> fn,
                              bool continuous,
                              std::string name = "custom");

  Kind kind() const { return kind_; }
  int arity() const { return k_; }
  bool continuous() const { return continuous_; }
  const std::string& name() const { return name_; }
  double plateau_c() const { return plateau_c_; }

  /// Evaluates f on a positive vector of length arity().
  /// Throws ArityMismatch; NonPositiveInput for GeometricMean/PlateauMax.
  double operator()(std::span<const double> v) const;

 private:
  Scalarization(Kind kind, int k, bool continuous, std::string name)
      : kind_(kind), k_(k), continuous_(continuous), name_(std::move(name)) {}

  Kind kind_;
  int k_;
  bool continuous_;
  std::string name_;
  double plateau_c_ = 0.0;
  double plateau_threshold_ = 0.0;  // c * sqrt(M/m)
  std::function<double(std::span<const double>)> fn_;
};

double evaluate(const Scalarization& f, std::span<const double> v);

/// Samples `sample_count` comparable pairs x <= y (componentwise) in the
/// positive orthant and reports whether f(x) <= f(y) held for all of them.
/// Deterministic for a fixed seed.
bool check_monotone(const Scalarization& f, int sample_count,
                    std::uint64_t seed);

}  // namespace motss
