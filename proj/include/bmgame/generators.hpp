#pragma once

#include "bmgame/instance.hpp"
#include "bmgame/rational.hpp"

namespace bmgame {

// The tight family: 2n vertex-disjoint cycles of odd length l, every
// capacity b (odd), every cycle edge of weight 1. With connect_links, one
// vertex per cycle is chosen and all chosen pairs are joined by weight-0
// edges, which stand in for vanishing-weight connectors without changing
// any optimum.
Instance gen_tight_family(int n, int l, i64 b, bool connect_links);

// Seeded Erdos-Renyi style generator. Deterministic for a fixed seed:
// the mt19937_64 stream is consumed in a fixed order (capacities first,
// then one inclusion draw per candidate pair, then a weight draw for each
// included edge). Capacities are uniform in [1, max_b], weights uniform
// in [0, max_w]. With bipartite=true the vertices split into two sides
// (first ceil(n/2) ids against the rest) and only cross pairs are
// candidates.
Instance gen_random(int n_vertices, const Rat& edge_prob, i64 max_b, i64 max_w,
                    std::uint64_t seed, bool bipartite);

} // namespace bmgame
