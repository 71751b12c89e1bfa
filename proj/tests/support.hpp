#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "motss/bounds.hpp"
#include "motss/pareto.hpp"

namespace motss::test {

inline double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo * std::exp(u01(rng) * std::log(hi / lo));
}

/// Random canonical k=2 bounds with phi_1 >= phi_2 in [phi_lo, phi_hi].
inline Bounds random_canonical_bounds2(std::mt19937_64& rng,
                                       double phi_lo = 1.1,
                                       double phi_hi = 100.0) {
  double phi1 = log_uniform(rng, phi_lo, phi_hi);
  double phi2 = log_uniform(rng, phi_lo, phi_hi);
  if (phi1 < phi2) std::swap(phi1, phi2);
  const double m1 = log_uniform(rng, 0.5, 2.0);
  const double m2 = log_uniform(rng, 0.5, 2.0);
  return Bounds::real({m1, m2}, {m1 * phi1, m2 * phi2});
}

inline Bounds random_bounds(std::mt19937_64& rng, int k, double phi_lo = 1.1,
                            double phi_hi = 100.0) {
  std::vector<double> lo(static_cast<std::size_t>(k));
  std::vector<double> hi(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    lo[static_cast<std::size_t>(i)] = log_uniform(rng, 0.5, 2.0);
    hi[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)] *
                                      log_uniform(rng, phi_lo, phi_hi);
  }
  return Bounds::real(std::move(lo), std::move(hi));
}

inline InputSequence random_sequence(std::mt19937_64& rng, const Bounds& b,
                                     int length) {
  std::vector<std::vector<double>> prices;
  prices.reserve(static_cast<std::size_t>(length));
  for (int t = 0; t < length; ++t) {
    std::vector<double> p(static_cast<std::size_t>(b.k()));
    for (int i = 0; i < b.k(); ++i) {
      p[static_cast<std::size_t>(i)] =
          log_uniform(rng, b.min_price(i), b.max_price(i));
    }
    prices.push_back(std::move(p));
  }
  return InputSequence(b, std::move(prices));
}

/// Independent oracle: O(T^2) all-pairs dominance filter.
inline std::vector<std::vector<double>> pareto_all_pairs(
    const InputSequence& seq) {
  std::vector<std::vector<double>> maximal;
  for (int a = 0; a < seq.length(); ++a) {
    bool keep = true;
    for (int b2 = 0; b2 < seq.length() && keep; ++b2) {
      if (a == b2) continue;
      const bool dominated = componentwise_leq(seq[a], seq[b2]);
      const bool equal = seq[a].values() == seq[b2].values();
      if (equal) {
        keep = keep && b2 > a;  // keep the first occurrence only
      } else if (dominated) {
        keep = false;
      }
    }
    if (keep) maximal.push_back(seq[a].values());
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

}  // namespace motss::test
