#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "motss/bounds.hpp"
#include "motss/scalarize.hpp"

namespace motss {

/// Decision trace of one online run: the accepted index and returned price
/// vector, or rejection of all prices (return p_min).
struct RunOutcome {
  std::optional<int> accepted_at;  // 1-based time; nullopt == rejected all
  PriceVector returned;
  std::vector<bool> trace;  // acceptance-test result per revealed step

  bool accepted() const { return accepted_at.has_value(); }
};

/// Online decision rule: sees only the already-revealed prefix and the price
/// just revealed, never the future.
using Policy = std::function<bool(std::span<const PriceVector> history,
                                  const PriceVector& price)>;

/// Balanced price policy test: accept p iff
/// f(M_1/p_1,...,M_k/p_k) <= f(p_1/m_1,...,p_k/m_k).
/// Exact floating comparison; equality accepts.
bool bpp_decide(const Scalarization& f, const Bounds& b, const PriceVector& p);

/// Runs the balanced price policy over a sequence: accepts at the earliest
/// step where bpp_decide holds, otherwise rejects all and returns p_min.
RunOutcome run_bpp(const Scalarization& f, const InputSequence& seq);

/// Reservation price policy test (single objective): accept p iff
/// p >= p* = sqrt(M*m).
bool rpp_decide(const Bounds& b, double price);

/// Runs an arbitrary deterministic policy with the same accept-earliest
/// semantics and p_min fallback as run_bpp.
RunOutcome run_generic(const Policy& policy, const InputSequence& seq);

Policy bpp_policy(const Scalarization& f, const Bounds& b);
Policy rpp_policy(const Bounds& b);
Policy accept_first_policy();
Policy reject_all_policy();

}  // namespace motss
