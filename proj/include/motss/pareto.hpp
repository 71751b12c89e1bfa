#pragma once

#include <vector>

#include "motss/bounds.hpp"

namespace motss {

/// The offline optimum: the set of componentwise-maximal revealed prices.
/// Members are kept in ascending lexicographic order; `source_indices[i]`
/// lists the 1-based reveal times of member i (duplicates collapsed).
struct ParetoFront {
  std::vector<PriceVector> members;
  std::vector<std::vector<int>> source_indices;

  int size() const { return static_cast<int>(members.size()); }
};

/// Maximal elements of {p_1,...,p_T} under the componentwise order. For
/// T = 0 the front is {p_min}.
ParetoFront pareto_maximal(const InputSequence& seq);

}  // namespace motss
