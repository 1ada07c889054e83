#include "curalight/net/phases.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "curalight/util/errors.hpp"

namespace curalight::net {

namespace {

using Mask = std::uint64_t;

// Bron-Kerbosch with pivoting over the compatibility graph; maximal cliques
// there are exactly the maximal independent sets of the conflict graph.
void bron_kerbosch(Mask r, Mask p, Mask x, const std::vector<Mask>& adj,
                   std::vector<Mask>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    const Mask px = p | x;
    int pivot = -1;
    int best = -1;
    for (Mask m = px; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        const int deg = std::popcount(p & adj[static_cast<std::size_t>(v)]);
        if (deg > best) {
            best = deg;
            pivot = v;
        }
    }
    Mask candidates = p & ~adj[static_cast<std::size_t>(pivot)];
    for (Mask m = candidates; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        const Mask bit = Mask{1} << v;
        bron_kerbosch(r | bit, p & adj[static_cast<std::size_t>(v)],
                      x & adj[static_cast<std::size_t>(v)], adj, out);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

std::vector<Phase> enumerate_phases(const std::vector<Movement>& movements,
                                    const ConflictRelation& conflicts) {
    const std::size_t n = movements.size();
    if (n > 32) {
        throw ValidationError("enumerate_phases: " + std::to_string(n) +
                              " movements exceed the 32-movement guard");
    }
    if (n == 0) return {Phase{1, {}}};

    std::vector<Mask> compat(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && !conflicts.conflicts(a, b)) compat[a] |= Mask{1} << b;
        }
    }

    std::vector<Mask> sets;
    bron_kerbosch(0, (n == 64 ? ~Mask{0} : (Mask{1} << n) - 1), 0, compat, sets);

    std::vector<Phase> phases;
    phases.reserve(sets.size());
    for (Mask m : sets) {
        Phase ph;
        for (Mask bits = m; bits != 0; bits &= bits - 1) {
            const int v = std::countr_zero(bits);
            ph.movements.push_back(movements[static_cast<std::size_t>(v)].id);
        }
        std::sort(ph.movements.begin(), ph.movements.end());
        phases.push_back(std::move(ph));
    }
    std::sort(phases.begin(), phases.end(),
              [](const Phase& a, const Phase& b) { return a.movements < b.movements; });
    phases.erase(std::unique(phases.begin(), phases.end(),
                             [](const Phase& a, const Phase& b) {
                                 return a.movements == b.movements;
                             }),
                 phases.end());
    for (std::size_t i = 0; i < phases.size(); ++i) phases[i].index = static_cast<int>(i + 1);
    return phases;
}

} // namespace curalight::net
