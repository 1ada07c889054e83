#include "curalight/net/conflicts.hpp"

#include <cmath>
#include <string>

#include "curalight/util/errors.hpp"

namespace curalight::net {

namespace {

// Quantize a heading difference to the nearest of {0, 90, 180, 270}.
int sector(double a_deg, double b_deg) {
    double d = std::fmod(b_deg - a_deg, 360.0);
    if (d < 0) d += 360.0;
    const int s = static_cast<int>(std::floor((d + 45.0) / 90.0)) % 4;
    return s * 90;
}

bool rule_conflict(Turn ta, double ha, Turn tb, double hb) {
    if (ta == Turn::Right || tb == Turn::Right) return false;
    const int dab = sector(ha, hb);
    if (ta == Turn::Through && tb == Turn::Through) return dab == 90 || dab == 270;
    if (ta == Turn::Left && tb == Turn::Left) return dab == 90 || dab == 270;
    // left vs through: conflict iff through heads at left's heading +90 or +180
    const Turn first = ta;
    const double h_left = first == Turn::Left ? ha : hb;
    const double h_thru = first == Turn::Left ? hb : ha;
    const int d = sector(h_left, h_thru);
    return d == 90 || d == 180;
}

} // namespace

ConflictRelation default_conflicts(const Intersection& ix) {
    const std::size_t n = ix.movements.size();
    ConflictRelation rel(n);

    auto heading = [&](const Movement& m) {
        auto it = ix.bearing_deg.find(m.from_lane);
        if (it == ix.bearing_deg.end()) {
            throw ValidationError("intersection " + std::to_string(ix.id) +
                                  ": movement " + std::to_string(m.id) +
                                  " has no approach bearing for lane " +
                                  std::to_string(m.from_lane));
        }
        return it->second;
    };

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const Movement& ma = ix.movements[a];
            const Movement& mb = ix.movements[b];
            if (ma.to_lane == mb.to_lane) {
                rel.set(a, b);
                continue;
            }
            if (rule_conflict(ma.turn, heading(ma), mb.turn, heading(mb))) rel.set(a, b);
        }
    }
    return rel;
}

ConflictRelation conflicts_from_pairs(
    const Intersection& ix, const std::vector<std::pair<MovementId, MovementId>>& pairs) {
    const std::size_t n = ix.movements.size();
    ConflictRelation rel(n);

    auto position = [&](MovementId id) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i) {
            if (ix.movements[i].id == id) return i;
        }
        throw ValidationError("intersection " + std::to_string(ix.id) +
                              ": conflict pair names unknown movement " + std::to_string(id));
    };

    for (const auto& [a, b] : pairs) {
        const std::size_t pa = position(a);
        const std::size_t pb = position(b);
        if (pa == pb) continue; // self-pairs ignored: relation stays irreflexive
        rel.set(pa, pb);
    }
    return rel;
}

} // namespace curalight::net
