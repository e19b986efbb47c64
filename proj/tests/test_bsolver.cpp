#include <doctest.h>

#include "bmgame/bsolver.hpp"
#include "bmgame/generators.hpp"
#include "support/brute_force.hpp"

using namespace bmgame;

namespace {

Instance single_edge() {
    return build_instance("edge", {{"1", 1}, {"2", 1}}, {{"1", "2", 5}});
}

Instance unit_triangle(i64 b = 1) {
    return build_instance("triangle", {{"0", b}, {"1", b}, {"2", b}},
                          {{"0", "1", 1}, {"1", "2", 1}, {"0", "2", 1}});
}

// View the doubled graph as a plain instance so the independent brute-force
// maximizer can price it.
Instance doubled_as_instance(const DoubledGraph& dg) {
    Instance inst;
    for (int v = 0; v < dg.vertex_count(); ++v) {
        inst.vertex_ids.push_back("d" + std::to_string(v));
        inst.capacity.push_back(dg.cap[v]);
    }
    for (auto& de : dg.edges) inst.edges.push_back({de.left, de.right, de.w});
    validate_instance(inst);
    return inst;
}

i64 doubled_objective(const DoubledGraph& dg, const std::vector<i64>& matching) {
    i64 total = 0;
    for (std::size_t k = 0; k < dg.edges.size(); ++k) total += dg.edges[k].w * matching[k];
    return total;
}

} // namespace

TEST_CASE("doubling a single edge") {
    DoubledGraph dg = build_doubled(single_edge());
    CHECK(dg.vertex_count() == 4);
    CHECK(dg.edge_count() == 2);
    CHECK(dg.edges[0].w == 5);
    CHECK(dg.edges[1].w == 5);
    // both copies cross sides
    CHECK(dg.edges[0].left < 2);
    CHECK(dg.edges[0].right >= 2);
    CHECK(dg.edges[1].left < 2);
    CHECK(dg.edges[1].right >= 2);
}

TEST_CASE("doubling a triangle gives a 6-cycle") {
    DoubledGraph dg = build_doubled(unit_triangle());
    CHECK(dg.vertex_count() == 6);
    CHECK(dg.edge_count() == 6);
    Instance as_inst = doubled_as_instance(dg);
    for (auto& adj : as_inst.incidence()) CHECK(adj.size() == 2); // single cycle
    CHECK(two_coloring(as_inst).has_value());                     // and it is even
}

TEST_CASE("doubling an edgeless graph") {
    Instance inst = build_instance("iso", {{"a", 1}, {"b", 2}, {"c", 1}}, {});
    DoubledGraph dg = build_doubled(inst);
    CHECK(dg.vertex_count() == 6);
    CHECK(dg.edge_count() == 0);
}

TEST_CASE("certified bipartite solve: doubled single edge") {
    DoubledGraph dg = build_doubled(single_edge());
    BipartiteSolution sol = solve_bipartite_certified(dg);
    CHECK(doubled_objective(dg, sol.matching) == 10);
    CHECK(testsupport::integral_optimum(doubled_as_instance(dg)) == 10);
    i64 dual = 0;
    for (int v = 0; v < dg.vertex_count(); ++v) dual += dg.cap[v] * sol.cover[v];
    CHECK(dual == 10);
}

TEST_CASE("certified bipartite solve: doubled triangle") {
    DoubledGraph dg = build_doubled(unit_triangle());
    BipartiteSolution sol = solve_bipartite_certified(dg);
    CHECK(doubled_objective(dg, sol.matching) == 3);
    CHECK(testsupport::integral_optimum(doubled_as_instance(dg)) == 3);
}

TEST_CASE("all-zero weights solve to zero with a zero cover") {
    Instance inst = build_instance("zero", {{"0", 2}, {"1", 1}, {"2", 1}},
                                   {{"0", "1", 0}, {"1", "2", 0}, {"0", "2", 0}});
    DoubledGraph dg = build_doubled(inst);
    BipartiteSolution sol = solve_bipartite_certified(dg);
    CHECK(doubled_objective(dg, sol.matching) == 0);
    for (i64 y : sol.cover) CHECK(y == 0);
}

TEST_CASE("fold back the triangle optimum") {
    Instance inst = unit_triangle();
    SolveResult sol = solve_certified(inst);
    for (i64 t : sol.x.twice_x) CHECK(t == 1); // x = 1/2 on every edge
    for (i64 t : sol.y.twice_y) CHECK(t == 1); // y = 1/2 everywhere
    CHECK(weight_half_units(inst, sol.x) == 3); // w(G,x) = 3/2
    CHECK(cover_half_units(inst, sol.y) == 3);
}

TEST_CASE("fold back the single edge") {
    Instance inst = single_edge();
    SolveResult sol = solve_certified(inst);
    CHECK(sol.x.twice_x[0] == 2); // x = 1
    CHECK(weight_half_units(inst, sol.x) == 10);
    CHECK(cover_half_units(inst, sol.y) == 10);
    CHECK(testsupport::lp_optimum_half_units(inst) == 10);
}

TEST_CASE("fold back a two-edge path") {
    Instance inst = build_instance("path", {{"u", 1}, {"v", 1}, {"w", 1}},
                                   {{"u", "v", 3}, {"v", "w", 4}});
    SolveResult sol = solve_certified(inst);
    CHECK(weight_half_units(inst, sol.x) == 8); // w(G,x) = 4
    CHECK(testsupport::lp_optimum_half_units(inst) == 8);
}

TEST_CASE("solver matches the brute-force LP optimum on random instances") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 4);        // 2..5
        i64 max_b = 1 + static_cast<i64>(seed % 2);    // 1..2
        Rat p(1 + static_cast<long long>(seed % 3), 3); // 1/3, 2/3, 1
        bool bip = seed % 5 == 0;
        Instance inst = gen_random(n, p, max_b, 9, seed, bip);

        SolveResult sol = solve_certified(inst);
        check_certificate(inst, sol.x, sol.y); // equal objectives + slackness
        CHECK(weight_half_units(inst, sol.x) == testsupport::lp_optimum_half_units(inst));
    }
}

TEST_CASE("bipartite instances fold to fully integral matchings") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Instance inst = gen_random(7, Rat(3, 5), 3, 12, seed, true);
        SolveResult sol = solve_certified(inst);
        for (i64 t : sol.x.twice_x) CHECK(t % 2 == 0);
    }
}
