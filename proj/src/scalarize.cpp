#include "motss/scalarize.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "motss/errors.hpp"

namespace motss {

namespace {

void require_arity(int expected, std::size_t got) {
  if (static_cast<std::size_t>(expected) != got) {
    throw ArityMismatch("scalarization expects arity " +
                        std::to_string(expected) + ", got " +
                        std::to_string(got));
  }
}

// Uniform in [0,1) from the high 53 bits; identical across platforms for a
// fixed engine state, unlike std::uniform_real_distribution.
double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Scalarization Scalarization::worst_component(int k) {
  if (k < 1) throw InvalidParameter("arity must be positive");
  return Scalarization(Kind::WorstComponent, k, true, "max");
}

Scalarization Scalarization::arithmetic_mean(int k) {
  if (k < 1) throw InvalidParameter("arity must be positive");
  return Scalarization(Kind::ArithmeticMean, k, true, "amean");
}

Scalarization Scalarization::geometric_mean(int k) {
  if (k < 1) throw InvalidParameter("arity must be positive");
  return Scalarization(Kind::GeometricMean, k, true, "gmean");
}

Scalarization Scalarization::best_component(int k) {
  if (k < 1) throw InvalidParameter("arity must be positive");
  return Scalarization(Kind::BestComponent, k, true, "min");
}

Scalarization Scalarization::plateau_max(double c, const Bounds& bounds) {
  if (bounds.k() != 1) {
    throw ArityMismatch("plateau-max is a single-objective scalarization");
  }
  const double root_phi = std::sqrt(bounds.fluctuation(0));
  if (!(c > 1.0 && c < root_phi)) {
    throw InvalidParameter("plateau-max requires 1 < c < sqrt(M/m)");
  }
  Scalarization f(Kind::PlateauMax, 1, true, "plateau");
  f.plateau_c_ = c;
  f.plateau_threshold_ = c * root_phi;
  return f;
}

Scalarization Scalarization::identity() {
  return Scalarization(Kind::Identity, 1, true, "identity");
}

Scalarization Scalarization::custom(
    int k, std::function<double(std::span<const double>)> fn, bool continuous,
    std::string name) {
  if (k < 1) throw InvalidParameter("arity must be positive");
  if (!fn) throw InvalidParameter("custom scalarization needs a callable");
  Scalarization f(Kind::Custom, k, continuous, std::move(name));
  f.fn_ = std::move(fn);
  return f;
}

double Scalarization::operator()(std::span<const double> v) const {
  require_arity(k_, v.size());
  switch (kind_) {
    case Kind::WorstComponent:
      return *std::max_element(v.begin(), v.end());
    case Kind::ArithmeticMean: {
      double s = 0.0;
      for (double x : v) s += x;
      return s / static_cast<double>(k_);
    }
    case Kind::GeometricMean: {
      // Mean of logs; the plain product overflows for large ratios.
      double s = 0.0;
      for (double x : v) {
        if (!(x > 0.0)) {
          throw NonPositiveInput("geometric mean needs positive components");
        }
        s += std::log(x);
      }
      return std::exp(s / static_cast<double>(k_));
    }
    case Kind::BestComponent:
      return *std::min_element(v.begin(), v.end());
    case Kind::PlateauMax: {
      if (!(v[0] > 0.0)) {
        throw NonPositiveInput("plateau-max needs a positive argument");
      }
      return std::max(v[0], plateau_threshold_);
    }
    case Kind::Identity:
      return v[0];
    case Kind::Custom:
      return fn_(v);
  }
  throw InvalidParameter("unknown scalarization kind");
}

double evaluate(const Scalarization& f, std::span<const double> v) {
  return f(v);
}

bool check_monotone(const Scalarization& f, int sample_count,
                    std::uint64_t seed) {
  if (sample_count < 1) throw InvalidParameter("sample_count must be >= 1");
  std::mt19937_64 rng(seed);
  const int k = f.arity();
  std::vector<double> x(static_cast<std::size_t>(k));
  std::vector<double> y(static_cast<std::size_t>(k));
  for (int s = 0; s < sample_count; ++s) {
    for (int i = 0; i < k; ++i) {
      // log-uniform in [0.1, 10], widened occasionally by an equal pair
      x[static_cast<std::size_t>(i)] =
          std::exp(std::log(0.1) + u01(rng) * std::log(100.0));
      const double bump = u01(rng) < 0.25 ? 0.0 : u01(rng);
      y[static_cast<std::size_t>(i)] =
          x[static_cast<std::size_t>(i)] * (1.0 + bump);
    }
    if (!(f(x) <= f(y))) return false;
  }
  return true;
}

}  // namespace motss
