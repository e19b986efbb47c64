#pragma once

#include <utility>
#include <vector>

#include "bmgame/bsolver.hpp"

namespace bmgame {

// Walk without repeated edges. vertices.size() == edges.size() + 1;
// edges[i] joins vertices[i] and vertices[i+1]. Closed when the first and
// last vertex coincide.
struct Trail {
    std::vector<int> vertices;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool closed() const {
        return !vertices.empty() && vertices.front() == vertices.back();
    }
};

// Simple cycle of odd length: edges[i] joins vertices[i] and
// vertices[(i+1) % l]. Dual annotations are filled by canonicalize().
struct OddCycle {
    std::vector<int> vertices;
    std::vector<int> edges;
    i64 b_min = 0;           // minimum capacity on the cycle
    i64 twice_y_min = 0;     // minimum dual on the cycle, half-units
    int min_dual_vertex = -1; // lowest vertex attaining twice_y_min

    int length() const { return static_cast<int>(edges.size()); }
    Trail as_trail_from(int vertex) const; // rotated closed trail
};

struct OddCycleSet {
    std::vector<OddCycle> cycles;

    bool empty() const { return cycles.empty(); }
    // min length / min capacity over all cycles; only valid when nonempty
    int l_min() const;
    i64 b_min() const;
};

// Edge indices whose x value is non-integral (twice_x odd).
std::vector<int> fractional_support(const HalfMatching& x);

// The alternating half-unit update along a trail: odd positions lose 1/2,
// even positions gain 1/2 (1-based). Every trail edge must currently be
// non-integral; afterwards every trail edge is integral. Feasibility of the
// result is checked and a violation throws internal_error, since the callers
// only apply trails whose feasibility is guaranteed.
void apply_trail_ops(const Instance& inst, HalfMatching& x, const Trail& trail);

// Removes all odd-degree vertices from the fractional support by applying
// the trail operations along simple paths between paired odd-degree
// vertices, one pair at a time. Requires a certified optimal pair (x, y);
// asserts exactly that the total weight never changes.
HalfMatching eliminate_odd_degree(const Instance& inst, HalfMatching x, const DualCover& y);

// With an all-even fractional support, repeatedly peels simple cycles.
// Even cycles are eliminated directly; an odd cycle meeting a previously
// peeled odd cycle is concatenated with it into an even closed trail and
// eliminated. What remains is a set of vertex-disjoint simple odd cycles:
// exactly the fractional support of the returned matching. Total weight is
// asserted unchanged.
std::pair<HalfMatching, OddCycleSet> eliminate_even_closed_trails(const Instance& inst,
                                                                  HalfMatching x);

// Full canonicalization: both elimination phases plus dual annotations on
// the resulting cycles. Preserves feasibility, the objective, the dual, and
// re-checks the certificate on exit.
struct CanonicalResult {
    HalfMatching x;
    OddCycleSet cycles;
};
CanonicalResult canonicalize(const Instance& inst, const HalfMatching& x, const DualCover& y);

} // namespace bmgame
