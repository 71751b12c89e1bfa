#include "motss/pareto.hpp"

#include <algorithm>
#include <numeric>

namespace motss {

ParetoFront pareto_maximal(const InputSequence& seq) {
  ParetoFront front;
  if (seq.length() == 0) {
    front.members.push_back(PriceVector::min_of(seq.bounds()));
    front.source_indices.push_back({});
    return front;
  }

  // Scan in descending lexicographic order: a later point can never strictly
  // dominate an earlier one, so one pass against the kept members suffices.
  std::vector<int> order(static_cast<std::size_t>(seq.length()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (seq[a].values() != seq[b].values()) {
      return lexicographic_less(seq[b], seq[a]);
    }
    return a < b;
  });

  for (int t : order) {
    const PriceVector& p = seq[t];
    bool dominated = false;
    bool merged = false;
    for (std::size_t i = 0; i < front.members.size(); ++i) {
      if (front.members[i] == p) {
        front.source_indices[i].push_back(t + 1);
        merged = true;
        break;
      }
      if (componentwise_leq(p, front.members[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated && !merged) {
      front.members.push_back(p);
      front.source_indices.push_back({t + 1});
    }
  }

  std::vector<int> perm(front.members.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return lexicographic_less(front.members[static_cast<std::size_t>(a)],
                              front.members[static_cast<std::size_t>(b)]);
  });
  ParetoFront sorted;
  sorted.members.reserve(front.members.size());
  sorted.source_indices.reserve(front.members.size());
  for (int i : perm) {
    sorted.members.push_back(std::move(front.members[static_cast<std::size_t>(i)]));
    auto& src = front.source_indices[static_cast<std::size_t>(i)];
    std::sort(src.begin(), src.end());
    sorted.source_indices.push_back(std::move(src));
  }
  return sorted;
}

}  // namespace motss
