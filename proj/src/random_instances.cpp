#include "motss/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "motss/errors.hpp"

namespace motss {

namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<InputSequence> generate_random_instances(const Bounds& b,
                                                     int max_length, int count,
                                                     std::uint64_t seed) {
  if (max_length < 1) throw InvalidParameter("max_length must be >= 1");
  if (count < 1) throw InvalidParameter("count must be >= 1");

  std::mt19937_64 rng(seed);
  auto shared = std::make_shared<const Bounds>(b);
  const int k = b.k();
  std::vector<double> log_span(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    log_span[static_cast<std::size_t>(i)] =
        std::log(b.max_price(i) / b.min_price(i));
  }

  std::vector<InputSequence> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    const int len =
        1 + static_cast<int>(u01(rng) * static_cast<double>(max_length));
    const int length = std::min(len, max_length);
    std::vector<PriceVector> prices;
    prices.reserve(static_cast<std::size_t>(length));
    std::vector<double> p(static_cast<std::size_t>(k));
    for (int t = 0; t < length; ++t) {
      for (int i = 0; i < k; ++i) {
        const double v =
            b.min_price(i) *
            std::exp(u01(rng) * log_span[static_cast<std::size_t>(i)]);
        p[static_cast<std::size_t>(i)] =
            std::clamp(v, b.min_price(i), b.max_price(i));
      }
      prices.emplace_back(p, *shared);
    }
    out.emplace_back(shared, std::move(prices));
  }
  return out;
}

}  // namespace motss
