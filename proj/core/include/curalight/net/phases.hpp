#pragma once

#include <vector>

#include "curalight/net/types.hpp"

namespace curalight::net {

// All maximal compatible movement sets (maximal independent sets of the
// conflict graph), deduplicated and ordered lexicographically by sorted member
// movement ids, so phase 1 holds the lowest movement id. Zero movements yield
// a single empty phase, which keeps movement-free (boundary) intersections
// well-formed. Throws ValidationError for more than 32 movements.
std::vector<Phase> enumerate_phases(const std::vector<Movement>& movements,
                                    const ConflictRelation& conflicts);

} // namespace curalight::net
