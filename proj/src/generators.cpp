#include "bmgame/generators.hpp"

#include <random>
#include <string>

namespace bmgame {

Instance gen_tight_family(int n, int l, i64 b, bool connect_links) {
    if (n < 1) throw validation_error("n must be >= 1 (got " + std::to_string(n) + ")");
    if (l < 3 || l % 2 == 0)
        throw validation_error("l must be odd and >= 3 (got " + std::to_string(l) + ")");
    if (b < 1 || b % 2 == 0)
        throw validation_error("b must be odd and >= 1 (got " + std::to_string(b) + ")");

    Instance inst;
    inst.name = "tight-n" + std::to_string(n) + "-l" + std::to_string(l) + "-b" +
                std::to_string(b) + (connect_links ? "-linked" : "");
    const int cycles = 2 * n;
    for (int c = 0; c < cycles; ++c) {
        for (int j = 0; j < l; ++j) {
            inst.vertex_ids.push_back(std::to_string(c * l + j));
            inst.capacity.push_back(b);
        }
    }
    for (int c = 0; c < cycles; ++c) {
        int base = c * l;
        for (int j = 0; j < l; ++j)
            inst.edges.push_back({base + j, base + (j + 1) % l, 1});
    }
    if (connect_links) {
        // chosen vertex of cycle c is its first vertex, c*l
        for (int c1 = 0; c1 < cycles; ++c1)
            for (int c2 = c1 + 1; c2 < cycles; ++c2)
                inst.edges.push_back({c1 * l, c2 * l, 0});
    }
    validate_instance(inst);
    return inst;
}

Instance gen_random(int n_vertices, const Rat& edge_prob, i64 max_b, i64 max_w,
                    std::uint64_t seed, bool bipartite) {
    if (n_vertices < 1)
        throw validation_error("n_vertices must be >= 1 (got " + std::to_string(n_vertices) + ")");
    if (max_b < 1)
        throw validation_error("max_b must be >= 1 (got " + std::to_string(max_b) + ")");
    if (max_w < 0)
        throw validation_error("max_w must be >= 0 (got " + std::to_string(max_w) + ")");
    if (edge_prob < Rat(0) || edge_prob > Rat(1))
        throw validation_error("edge_prob must lie in [0,1] (got " + edge_prob.to_string() + ")");

    std::mt19937_64 rng(seed);

    Instance inst;
    inst.name = (bipartite ? "rb-" : "r-") + std::to_string(n_vertices) + "-s" +
                std::to_string(seed);
    for (int i = 0; i < n_vertices; ++i) {
        inst.vertex_ids.push_back(std::to_string(i));
        inst.capacity.push_back(1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(max_b)));
    }

    const std::uint64_t p = static_cast<std::uint64_t>(edge_prob.num());
    const std::uint64_t q = static_cast<std::uint64_t>(edge_prob.den());
    const int side_a = (n_vertices + 1) / 2;

    auto consider = [&](int i, int j) {
        bool include = (rng() % q) < p;
        if (!include) return;
        i64 w = static_cast<i64>(rng() % static_cast<std::uint64_t>(max_w + 1));
        inst.edges.push_back({i, j, w});
    };

    if (bipartite) {
        for (int i = 0; i < side_a; ++i)
            for (int j = side_a; j < n_vertices; ++j)
                consider(i, j);
    } else {
        for (int i = 0; i < n_vertices; ++i)
            for (int j = i + 1; j < n_vertices; ++j)
                consider(i, j);
    }

    validate_instance(inst);
    return inst;
}

} // namespace bmgame
