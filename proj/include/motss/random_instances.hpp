#pragma once

#include <cstdint>
#include <vector>

#include "motss/bounds.hpp"

namespace motss {

/// Seeded instance generator: each instance has a length drawn uniformly
/// from [1, max_length] and prices drawn log-uniformly per coordinate within
/// [m_i, M_i]. Identical seeds give identical lists.
std::vector<InputSequence> generate_random_instances(const Bounds& b,
                                                     int max_length, int count,
                                                     std::uint64_t seed);

}  // namespace motss
