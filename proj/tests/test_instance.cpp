#include <doctest.h>

#include <string>

#include "bmgame/generators.hpp"
#include "bmgame/instance.hpp"

using namespace bmgame;

namespace {

std::string doc(const std::string& vertices, const std::string& edges) {
    return "{\"vertices\": [" + vertices + "], \"edges\": [" + edges + "]}";
}

} // namespace

TEST_CASE("minimal well-formed instance loads") {
    Instance inst = load_instance(
        doc(R"({"id":1,"b":1},{"id":2,"b":1})", R"({"u":1,"v":2,"w":5})"));
    CHECK(inst.vertex_count() == 2);
    CHECK(inst.edge_count() == 1);
    CHECK(inst.edges[0].w == 5);
    CHECK(inst.capacity[0] == 1);
}

TEST_CASE("triangle instance loads") {
    Instance inst = load_instance(doc(
        R"({"id":1,"b":1},{"id":2,"b":1},{"id":3,"b":1})",
        R"({"u":1,"v":2,"w":1},{"u":2,"v":3,"w":1},{"u":1,"v":3,"w":1})"));
    CHECK(inst.vertex_count() == 3);
    CHECK(inst.edge_count() == 3);
}

TEST_CASE("validation errors name the offending element") {
    CHECK_THROWS_WITH_AS(
        load_instance(doc(R"({"id":1,"b":1})", R"({"u":1,"v":1,"w":2})")),
        doctest::Contains("self-loop at vertex '1'"), validation_error);
    CHECK_THROWS_WITH_AS(
        load_instance(doc(R"({"id":1,"b":1},{"id":2,"b":1})",
                          R"({"u":1,"v":2,"w":1},{"u":2,"v":1,"w":3})")),
        doctest::Contains("parallel edge"), validation_error);
    CHECK_THROWS_WITH_AS(
        load_instance(doc(R"({"id":1,"b":0},{"id":2,"b":1})", "")),
        doctest::Contains("capacity of vertex '1'"), validation_error);
    CHECK_THROWS_WITH_AS(
        load_instance(doc(R"({"id":1,"b":1},{"id":2,"b":1})", R"({"u":1,"v":2,"w":-2})")),
        doctest::Contains("negative weight"), validation_error);
    CHECK_THROWS_WITH_AS(
        load_instance(doc(R"({"id":1,"b":1})", R"({"u":1,"v":9,"w":1})")),
        doctest::Contains("'9' is not a declared vertex"), validation_error);
    CHECK_THROWS_WITH_AS(
        load_instance(doc(R"({"id":1,"b":1},{"id":1,"b":2})", "")),
        doctest::Contains("duplicate vertex id '1'"), validation_error);
}

TEST_CASE("parse errors for malformed documents") {
    CHECK_THROWS_AS(load_instance("not json"), parse_error);
    CHECK_THROWS_AS(load_instance("[]"), parse_error);
    CHECK_THROWS_AS(load_instance(R"({"vertices": 3, "edges": []})"), parse_error);
    CHECK_THROWS_AS(
        load_instance(doc(R"({"id":1,"b":1.5})", "")), parse_error);
    CHECK_THROWS_AS(
        load_instance(doc(R"({"id":1,"b":1},{"id":2,"b":1})", R"({"u":1,"v":2,"w":0.5})")),
        parse_error);
}

TEST_CASE("rational weights are pre-scaled to integers") {
    Instance inst = load_instance(doc(
        R"({"id":1,"b":1},{"id":2,"b":1},{"id":3,"b":1})",
        R"({"u":1,"v":2,"w":"1/2"},{"u":2,"v":3,"w":1})"));
    CHECK(inst.edges[0].w == 1);
    CHECK(inst.edges[1].w == 2);
}

TEST_CASE("save/load round trip is the identity") {
    auto check_roundtrip = [](const Instance& inst) {
        Instance again = load_instance(save_instance(inst));
        CHECK(again == inst);
    };
    check_roundtrip(build_instance(
        "named", {{"a", 2}, {"b", 1}, {"7", 3}},
        {{"a", "b", 4}, {"b", "7", 0}}));
    check_roundtrip(gen_tight_family(2, 5, 3, true));
    for (std::uint64_t seed : {1, 2, 3, 4, 5})
        check_roundtrip(gen_random(7, Rat(1, 2), 3, 20, seed, false));
}

TEST_CASE("tight family shape") {
    Instance two_triangles = gen_tight_family(1, 3, 1, false);
    CHECK(two_triangles.vertex_count() == 6);
    CHECK(two_triangles.edge_count() == 6);
    for (i64 b : two_triangles.capacity) CHECK(b == 1);
    for (auto& e : two_triangles.edges) CHECK(e.w == 1);

    Instance four_five_cycles = gen_tight_family(2, 5, 3, false);
    CHECK(four_five_cycles.vertex_count() == 20);
    CHECK(four_five_cycles.edge_count() == 20);
    for (i64 b : four_five_cycles.capacity) CHECK(b == 3);

    // 2n*l vertices and edges, every degree exactly 2
    for (int n : {1, 2})
        for (int l : {3, 5})
            for (i64 b : {1, 3}) {
                Instance inst = gen_tight_family(n, l, b, false);
                CHECK(inst.vertex_count() == 2 * n * l);
                CHECK(inst.edge_count() == 2 * n * l);
                for (auto& adj : inst.incidence()) CHECK(adj.size() == 2);
            }
}

TEST_CASE("tight family parameter validation") {
    CHECK_THROWS_WITH_AS(gen_tight_family(1, 4, 1, false), doctest::Contains("l must be odd"),
                         validation_error);
    CHECK_THROWS_WITH_AS(gen_tight_family(1, 3, 2, false), doctest::Contains("b must be odd"),
                         validation_error);
    CHECK_THROWS_AS(gen_tight_family(0, 3, 1, false), validation_error);
}

TEST_CASE("tight family connector edges") {
    Instance linked = gen_tight_family(2, 3, 1, true);
    // 4 cycles of 3 plus a weight-0 clique on the 4 chosen vertices
    CHECK(linked.vertex_count() == 12);
    CHECK(linked.edge_count() == 12 + 6);
    int zero_weight = 0;
    for (auto& e : linked.edges) zero_weight += e.w == 0;
    CHECK(zero_weight == 6);
    CHECK_FALSE(two_coloring(linked).has_value()); // still has odd cycles, now connected
}

TEST_CASE("random generator determinism and shape") {
    // edge_prob 1 forces the complete graph; capacities are pinned by max_b=1
    for (std::uint64_t seed : {0, 9, 123}) {
        Instance k4 = gen_random(4, Rat(1), 1, 1, seed, false);
        CHECK(k4.edge_count() == 6);
        for (i64 b : k4.capacity) CHECK(b == 1);
        for (auto& e : k4.edges) {
            CHECK(e.w >= 0);
            CHECK(e.w <= 1);
        }
    }

    Instance a = gen_random(6, Rat(1, 2), 3, 20, 42, true);
    Instance b = gen_random(6, Rat(1, 2), 3, 20, 42, true);
    CHECK(a == b);

    Instance lonely = gen_random(1, Rat(1), 1, 1, 5, false);
    CHECK(lonely.vertex_count() == 1);
    CHECK(lonely.edge_count() == 0);
}

TEST_CASE("bipartite random instances 2-color") {
    for (std::uint64_t seed : {1, 7, 42, 99}) {
        Instance inst = gen_random(8, Rat(2, 3), 3, 9, seed, true);
        CHECK(two_coloring(inst).has_value());
    }
    CHECK_FALSE(two_coloring(gen_tight_family(1, 3, 1, false)).has_value());
}
