#pragma once

#include <vector>

#include "bmgame/instance.hpp"

namespace bmgame {

// Fractional b-matching in exact half-units: twice_x[e] stores 2*x_e, so
// every representable value is half-integral by construction.
struct HalfMatching {
    std::vector<i64> twice_x; // per edge index, nonnegative
};

// Fractional w-cover in exact half-units: twice_y[v] stores 2*y_v.
struct DualCover {
    std::vector<i64> twice_y; // per vertex index, nonnegative
};

// Bipartite double of the instance: vertices i' (= i) and i'' (= n + i)
// with the original capacity, and for every original edge uv two crossed
// copies (u', v'') and (v', u'') with the original weight. Doubling turns
// every cycle of length k into one of length 2k, so the double is always
// bipartite with sides {i'} and {i''}.
struct DoubledGraph {
    struct DEdge {
        int left;  // in [0, n)   -- a primed vertex
        int right; // in [n, 2n)  -- a double-primed vertex
        i64 w;
    };

    int n_orig = 0;
    int m_orig = 0;
    std::vector<i64> cap;     // size 2n; cap[i] == cap[n+i] == b_i
    std::vector<DEdge> edges; // size 2m; edges 2e and 2e+1 are the copies of e

    int vertex_count() const { return 2 * n_orig; }
    int edge_count() const { return 2 * m_orig; }
};

DoubledGraph build_doubled(const Instance& inst);

// Integral optimum of the doubled graph together with an integral optimal
// cover certifying it.
struct BipartiteSolution {
    std::vector<i64> matching; // x-hat per doubled edge, integral
    std::vector<i64> cover;    // y-hat per doubled vertex, integral
};

// Maximum-weight b-matching of the (bipartite) doubled graph by successive
// shortest augmenting paths on the flow network, plus an optimal cover and
// the exact equality of objectives. When mirror_coloring is given (a proper
// 2-coloring of the *original* instance), the double splits into two
// disjoint isomorphic components; the first component's optimum is copied
// onto the second so both halves agree, which keeps the folded matching
// integral on bipartite inputs.
BipartiteSolution solve_bipartite_certified(const DoubledGraph& dg,
                                            const std::vector<int>* mirror_coloring = nullptr);

// Optimal cover derived from an optimal matching: Bellman-Ford potentials
// on the complementary-slackness constraint graph. Throws internal_error if
// the matching admits no such cover (i.e. it is not optimal).
std::vector<i64> cover_from_slackness(const DoubledGraph& dg,
                                      const std::vector<i64>& matching);

// Halving map back to the original instance:
//   twice_x[uv] = xhat[u'v''] + xhat[v'u'']     twice_y[i] = yhat[i'] + yhat[i'']
// Checks feasibility of both sides and the exact certificate
// sum_e w_e * twice_x_e == sum_i b_i * twice_y_i.
struct FoldResult {
    HalfMatching x;
    DualCover y;
};
FoldResult fold_back(const DoubledGraph& dg, const BipartiteSolution& sol);

// Full solve: doubled graph, certified bipartite optimum (mirrored when the
// instance itself is bipartite), folded back. On bipartite instances the
// result is additionally asserted to be fully integral.
struct SolveResult {
    HalfMatching x;
    DualCover y;
};
SolveResult solve_certified(const Instance& inst);

// sum_e w_e * twice_x_e == 2 * w(G, x)
i64 weight_half_units(const Instance& inst, const HalfMatching& x);
// sum_i b_i * twice_y_i == 2 * b(G, y)
i64 cover_half_units(const Instance& inst, const DualCover& y);

// Feasibility / certificate checks in exact integer arithmetic; all throw
// internal_error on failure.
void check_matching_feasible(const Instance& inst, const HalfMatching& x);
void check_cover_feasible(const Instance& inst, const DualCover& y);
// Equal objectives plus both complementary-slackness identities, term by term.
void check_certificate(const Instance& inst, const HalfMatching& x, const DualCover& y);

} // namespace bmgame
