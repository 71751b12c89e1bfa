#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace motss {

enum class IntervalKind { Real, FiniteGrid };

/// Per-objective price intervals [m_i, M_i] with 0 < m_i <= M_i, plus the
/// derived fluctuation ratios phi_i = M_i / m_i. An interval is either a
/// real interval or an explicit finite price set whose endpoints are grid
/// members.
class Bounds {
 public:
  /// Validated construction from minimum/maximum price vectors.
  static Bounds real(std::vector<double> min_prices,
                     std::vector<double> max_prices);

  /// Finite price sets, one per objective; points are sorted and deduplicated,
  /// and m_i/M_i are the extreme members.
  static Bounds finite_grid(std::vector<std::vector<double>> points);

  /// Finite grid with `counts[i]` geometrically spaced points on [m_i, M_i]
  /// (endpoints included). counts[i] == 1 requires m_i == M_i.
  static Bounds geometric_grid(const std::vector<double>& min_prices,
                               const std::vector<double>& max_prices,
                               const std::vector<int>& counts);

  int k() const { return static_cast<int>(min_.size()); }
  IntervalKind interval_kind() const { return kind_; }

  double min_price(int i) const { return min_[i]; }
  double max_price(int i) const { return max_[i]; }
  const std::vector<double>& min_prices() const { return min_; }
  const std::vector<double>& max_prices() const { return max_; }

  /// phi_i = M_i / m_i >= 1.
  double fluctuation(int i) const { return phi_[i]; }
  const std::vector<double>& fluctuations() const { return phi_; }

  /// Grid points of objective i (FiniteGrid only).
  const std::vector<double>& grid(int i) const;
  long long grid_point_count() const;

  /// True when phi_1 >= phi_2 >= ... >= phi_k.
  bool is_canonical() const;

  bool contains(std::span<const double> p) const;

  friend bool operator==(const Bounds&, const Bounds&) = default;

 private:
  Bounds(std::vector<double> min_prices, std::vector<double> max_prices,
         IntervalKind kind, std::vector<std::vector<double>> grids);

  std::vector<double> min_;
  std::vector<double> max_;
  std::vector<double> phi_;
  IntervalKind kind_;
  std::vector<std::vector<double>> grids_;  // empty for Real
};

/// Validates price interval vectors and computes fluctuation ratios.
/// Throws NonPositivePrice, InvertedInterval, or LengthMismatch.
Bounds validate_bounds(const std::vector<double>& min_prices,
                       const std::vector<double>& max_prices);

/// Records the objective permutation that sorts fluctuation ratios in
/// descending order. `permutation[pos]` is the original index of the
/// objective placed at `pos`.
struct CanonicalOrdering {
  std::vector<int> permutation;
  bool applied = false;

  bool is_identity() const;
  std::vector<double> apply(std::span<const double> v) const;
  std::vector<double> inverse(std::span<const double> v) const;
};

/// Reorders objectives so that phi_1 >= ... >= phi_k. Stable: ties keep
/// their original relative order; idempotent on sorted input.
std::pair<Bounds, CanonicalOrdering> canonicalize(const Bounds& b);

/// A revealed price vector, validated against its bounds at construction
/// (exact comparisons; construction outside the bounds throws OutOfBounds).
class PriceVector {
 public:
  PriceVector(std::vector<double> values, const Bounds& b);

  static PriceVector min_of(const Bounds& b);  // p_min = (m_1,...,m_k)
  static PriceVector max_of(const Bounds& b);  // p_max = (M_1,...,M_k)

  int k() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  operator std::span<const double>() const { return values_; }

  friend bool operator==(const PriceVector&, const PriceVector&) = default;

 private:
  explicit PriceVector(std::vector<double> values)
      : values_(std::move(values)) {}

  std::vector<double> values_;
};

/// x <= y componentwise.
bool componentwise_leq(std::span<const double> x, std::span<const double> y);
bool lexicographic_less(std::span<const double> x, std::span<const double> y);

/// An ordered sequence of price vectors sharing one Bounds. T = 0 is legal.
class InputSequence {
 public:
  InputSequence(const Bounds& b, std::vector<std::vector<double>> prices);
  InputSequence(std::shared_ptr<const Bounds> b,
                std::vector<PriceVector> prices);

  const Bounds& bounds() const { return *bounds_; }
  std::shared_ptr<const Bounds> bounds_ptr() const { return bounds_; }
  int length() const { return static_cast<int>(prices_.size()); }
  const PriceVector& operator[](int t) const { return prices_[t]; }  // 0-based
  const std::vector<PriceVector>& prices() const { return prices_; }

 private:
  std::shared_ptr<const Bounds> bounds_;
  std::vector<PriceVector> prices_;
};

}  // namespace motss
