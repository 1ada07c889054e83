#pragma once

#include "curalight/net/types.hpp"

namespace curalight::net {

// Default geometric conflict rule for one intersection. Requires approach
// bearings for every from-lane that carries a movement.
//
// With headings quantized to 90-degree sectors (delta = heading(b) - heading(a)):
//   - through vs through: conflict iff perpendicular (delta 90 or 270)
//   - left (heading h) vs through (heading t): conflict iff t - h is 180
//     (oncoming) or 90
//   - left vs left: conflict iff perpendicular
//   - right turns conflict with nothing by trajectory
//   - any two movements sharing a to-lane conflict (merge)
// Matches straight-segment trajectory crossing on a standard 4-leg layout;
// see the trajectory oracle in the test suite.
ConflictRelation default_conflicts(const Intersection& ix);

// Conflict relation from an explicit pair list (positions into ix.movements
// resolved from movement ids).
ConflictRelation conflicts_from_pairs(const Intersection& ix,
                                      const std::vector<std::pair<MovementId, MovementId>>& pairs);

} // namespace curalight::net
