#include "motss/algorithms.hpp"

#include <cmath>

#include "motss/errors.hpp"

namespace motss {

namespace {

void require_arity(const Scalarization& f, const Bounds& b) {
  if (f.arity() != b.k()) {
    throw ArityMismatch("scalarization arity " + std::to_string(f.arity()) +
                        " does not match " + std::to_string(b.k()) +
                        " objectives");
  }
}

}  // namespace

bool bpp_decide(const Scalarization& f, const Bounds& b,
                const PriceVector& p) {
  require_arity(f, b);
  const int k = b.k();
  std::vector<double> upside(static_cast<std::size_t>(k));
  std::vector<double> downside(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    upside[static_cast<std::size_t>(i)] = b.max_price(i) / p[i];
    downside[static_cast<std::size_t>(i)] = p[i] / b.min_price(i);
  }
  return f(upside) <= f(downside);
}

RunOutcome run_bpp(const Scalarization& f, const InputSequence& seq) {
  require_arity(f, seq.bounds());
  return run_generic(bpp_policy(f, seq.bounds()), seq);
}

bool rpp_decide(const Bounds& b, double price) {
  if (b.k() != 1) {
    throw ArityMismatch("the reservation price policy is single-objective");
  }
  return price >= std::sqrt(b.max_price(0) * b.min_price(0));
}

RunOutcome run_generic(const Policy& policy, const InputSequence& seq) {
  std::vector<bool> trace;
  trace.reserve(static_cast<std::size_t>(seq.length()));
  for (int t = 0; t < seq.length(); ++t) {
    std::span<const PriceVector> history(seq.prices().data(),
                                         static_cast<std::size_t>(t));
    const bool accept = policy(history, seq[t]);
    trace.push_back(accept);
    if (accept) {
      return RunOutcome{t + 1, seq[t], std::move(trace)};
    }
  }
  return RunOutcome{std::nullopt, PriceVector::min_of(seq.bounds()),
                    std::move(trace)};
}

Policy bpp_policy(const Scalarization& f, const Bounds& b) {
  require_arity(f, b);
  return [f, b](std::span<const PriceVector>, const PriceVector& p) {
    return bpp_decide(f, b, p);
  };
}

Policy rpp_policy(const Bounds& b) {
  if (b.k() != 1) {
    throw ArityMismatch("the reservation price policy is single-objective");
  }
  return [b](std::span<const PriceVector>, const PriceVector& p) {
    return rpp_decide(b, p[0]);
  };
}

Policy accept_first_policy() {
  return [](std::span<const PriceVector>, const PriceVector&) { return true; };
}

Policy reject_all_policy() {
  return [](std::span<const PriceVector>, const PriceVector&) {
    return false;
  };
}

}  // namespace motss
