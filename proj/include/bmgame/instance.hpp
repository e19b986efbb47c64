#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bmgame/errors.hpp"

namespace bmgame {

using i64 = std::int64_t;

struct Edge {
    int u = 0; // vertex index, u < v
    int v = 0;
    i64 w = 0; // nonnegative integer weight
};

// A b-matching game instance: simple undirected graph, positive integral
// vertex capacities, nonnegative integral edge weights. Immutable after
// construction/validation; safe to share across threads.
struct Instance {
    std::string name;
    std::vector<std::string> vertex_ids; // document order; index is the vertex handle
    std::vector<i64> capacity;           // b[v] >= 1
    std::vector<Edge> edges;

    int vertex_count() const { return static_cast<int>(vertex_ids.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    // Index of a vertex id, or -1.
    int index_of(const std::string& id) const;

    // edge indices incident to each vertex
    std::vector<std::vector<int>> incidence() const;

    bool operator==(const Instance& o) const {
        return name == o.name && vertex_ids == o.vertex_ids &&
               capacity == o.capacity && edges_equal(o);
    }

private:
    bool edges_equal(const Instance& o) const;
};

// Subset of the player set, kept as sorted unique vertex indices.
struct Coalition {
    std::vector<int> members;

    static Coalition of(std::vector<int> verts);
    static Coalition grand(const Instance& inst);
    bool contains(int v) const;
};

// Checks all instance invariants; throws validation_error naming the
// offending element. Normalizes edge endpoints to u < v.
void validate_instance(Instance& inst);

// Convenience builder for tests and generators: vertices as (id, b),
// edges as (id, id, w). Validates.
Instance build_instance(std::string name,
                        const std::vector<std::pair<std::string, i64>>& vertices,
                        const std::vector<std::tuple<std::string, std::string, i64>>& edges);

// Parses the JSON instance document and validates it. Rational edge
// weights ("p/q") are accepted and pre-scaled: every weight is multiplied
// by the least common denominator so the stored instance is integral.
Instance load_instance(const std::string& text);

// Canonical JSON serialization; load_instance(save_instance(i)) == i.
std::string save_instance(const Instance& inst);

// Proper 2-coloring of the vertices if the graph is bipartite, else nullopt.
std::optional<std::vector<int>> two_coloring(const Instance& inst);

// True when a vertex id is a canonical nonnegative decimal and may be
// emitted as a JSON integer without changing its identity on reload.
bool id_prints_as_int(const std::string& id);

} // namespace bmgame
