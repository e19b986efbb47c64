#include "bmgame/canonical.hpp"

#include <algorithm>
#include <deque>

namespace bmgame {

namespace {

// Adjacency restricted to a working edge set, rebuilt on demand. Edge and
// neighbor order follow instance edge order, which keeps every walk in this
// module deterministic.
std::vector<std::vector<int>> support_incidence(const Instance& inst,
                                                const std::vector<char>& in_set) {
    std::vector<std::vector<int>> inc(inst.vertex_count());
    for (int e = 0; e < inst.edge_count(); ++e) {
        if (!in_set[e]) continue;
        inc[inst.edges[e].u].push_back(e);
        inc[inst.edges[e].v].push_back(e);
    }
    return inc;
}

int other_end(const Instance& inst, int e, int v) {
    return inst.edges[e].u == v ? inst.edges[e].v : inst.edges[e].u;
}

} // namespace

Trail OddCycle::as_trail_from(int vertex) const {
    auto it = std::find(vertices.begin(), vertices.end(), vertex);
    if (it == vertices.end()) throw internal_error("rotation vertex not on cycle");
    int p = static_cast<int>(it - vertices.begin());
    const int l = length();
    Trail t;
    t.vertices.reserve(l + 1);
    t.edges.reserve(l);
    for (int i = 0; i < l; ++i) {
        t.vertices.push_back(vertices[(p + i) % l]);
        t.edges.push_back(edges[(p + i) % l]);
    }
    t.vertices.push_back(vertex);
    return t;
}

int OddCycleSet::l_min() const {
    if (cycles.empty()) throw internal_error("l_min of empty cycle set");
    int m = cycles[0].length();
    for (auto& c : cycles) m = std::min(m, c.length());
    return m;
}

i64 OddCycleSet::b_min() const {
    if (cycles.empty()) throw internal_error("b_min of empty cycle set");
    i64 m = cycles[0].b_min;
    for (auto& c : cycles) m = std::min(m, c.b_min);
    return m;
}

std::vector<int> fractional_support(const HalfMatching& x) {
    std::vector<int> support;
    for (int e = 0; e < static_cast<int>(x.twice_x.size()); ++e)
        if (x.twice_x[e] % 2 != 0) support.push_back(e);
    return support;
}

void apply_trail_ops(const Instance& inst, HalfMatching& x, const Trail& trail) {
    const int l = trail.length();
    if (static_cast<int>(trail.vertices.size()) != l + 1)
        throw internal_error("trail vertex/edge count mismatch");

    std::vector<char> used(inst.edge_count(), 0);
    for (int i = 0; i < l; ++i) {
        int e = trail.edges[i];
        const auto& ed = inst.edges[e];
        int a = trail.vertices[i], b = trail.vertices[i + 1];
        if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
            throw internal_error("trail edge does not join its stated vertices");
        if (used[e]) throw internal_error("trail repeats an edge");
        used[e] = 1;
        if (x.twice_x[e] % 2 == 0)
            throw internal_error("trail edge is not in the fractional support");
    }

    for (int i = 0; i < l; ++i) {
        // 1-based position: odd positions lose a half, even ones gain a half
        x.twice_x[trail.edges[i]] += (i % 2 == 0) ? -1 : +1;
        if (x.twice_x[trail.edges[i]] < 0)
            throw internal_error("trail operation drove an edge negative");
    }

    // Interior vertex sums are untouched by the alternation; only the trail
    // ends can change, so feasibility needs checking there alone. Checking
    // all vertices is as simple and this is not a hot path.
    check_matching_feasible(inst, x);
}

HalfMatching eliminate_odd_degree(const Instance& inst, HalfMatching x, const DualCover& y) {
    const i64 w2_total = weight_half_units(inst, x);

    for (;;) {
        std::vector<char> in_support(inst.edge_count(), 0);
        for (int e : fractional_support(x)) in_support[e] = 1;
        auto inc = support_incidence(inst, in_support);

        int start = -1;
        for (int v = 0; v < inst.vertex_count(); ++v)
            if (inc[v].size() % 2 != 0) {
                start = v;
                break;
            }
        if (start < 0) break;

        // BFS over the support from the lowest odd-degree vertex; its
        // component holds another odd-degree vertex (they pair up within
        // components), and the BFS tree path to the lowest such vertex is a
        // simple path, hence a trail.
        std::vector<int> parent_edge(inst.vertex_count(), -1);
        std::vector<char> seen(inst.vertex_count(), 0);
        std::deque<int> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int e : inc[v]) {
                int u = other_end(inst, e, v);
                if (seen[u]) continue;
                seen[u] = 1;
                parent_edge[u] = e;
                queue.push_back(u);
            }
        }
        int target = -1;
        for (int v = 0; v < inst.vertex_count(); ++v)
            if (v != start && seen[v] && inc[v].size() % 2 != 0) {
                target = v;
                break;
            }
        if (target < 0)
            throw internal_error("odd-degree vertex without a partner in its component");

        // At a certified optimum an odd fractional degree forces strict
        // capacity slack, so the dual vanishes at both trail ends.
        if (y.twice_y[start] != 0 || y.twice_y[target] != 0)
            throw internal_error("nonzero dual at an odd-degree support vertex");

        Trail t;
        for (int v = target; v != start;) {
            int e = parent_edge[v];
            t.edges.push_back(e);
            t.vertices.push_back(v);
            v = other_end(inst, e, v);
        }
        t.vertices.push_back(start);
        std::reverse(t.vertices.begin(), t.vertices.end());
        std::reverse(t.edges.begin(), t.edges.end());

        apply_trail_ops(inst, x, t);
        if (weight_half_units(inst, x) != w2_total)
            throw internal_error("odd-degree elimination changed the objective");
    }
    return x;
}

std::pair<HalfMatching, OddCycleSet> eliminate_even_closed_trails(const Instance& inst,
                                                                  HalfMatching x) {
    const i64 w2_total = weight_half_units(inst, x);

    std::vector<char> work(inst.edge_count(), 0);
    for (int e : fractional_support(x)) work[e] = 1;
    {
        auto inc = support_incidence(inst, work);
        for (int v = 0; v < inst.vertex_count(); ++v)
            if (inc[v].size() % 2 != 0)
                throw internal_error("even-trail elimination requires an all-even support");
    }

    std::vector<OddCycle> pending;

    for (;;) {
        auto inc = support_incidence(inst, work);
        int start = -1;
        for (int v = 0; v < inst.vertex_count(); ++v)
            if (!inc[v].empty()) {
                start = v;
                break;
            }
        if (start < 0) break;

        // Walk from `start`, always taking the lowest-numbered unused edge.
        // Degrees are all even, so the walk cannot get stuck before some
        // vertex repeats; the segment between the two occurrences is a
        // simple cycle.
        std::vector<int> pos(inst.vertex_count(), -1);
        std::vector<int> walk_vertices{start};
        std::vector<int> walk_edges;
        std::vector<char> used(inst.edge_count(), 0);
        pos[start] = 0;
        int cur = start;
        int repeat_at = -1;
        while (repeat_at < 0) {
            int next_edge = -1;
            for (int e : inc[cur])
                if (!used[e]) {
                    next_edge = e;
                    break;
                }
            if (next_edge < 0) throw internal_error("support walk got stuck");
            used[next_edge] = 1;
            cur = other_end(inst, next_edge, cur);
            walk_edges.push_back(next_edge);
            walk_vertices.push_back(cur);
            if (pos[cur] >= 0)
                repeat_at = pos[cur];
            else
                pos[cur] = static_cast<int>(walk_vertices.size()) - 1;
        }

        OddCycle cycle;
        for (int i = repeat_at; i + 1 < static_cast<int>(walk_vertices.size()); ++i) {
            cycle.vertices.push_back(walk_vertices[i]);
            cycle.edges.push_back(walk_edges[i]);
        }
        for (int e : cycle.edges) work[e] = 0;

        if (cycle.length() % 2 == 0) {
            Trail t = cycle.as_trail_from(cycle.vertices[0]);
            apply_trail_ops(inst, x, t);
            if (weight_half_units(inst, x) != w2_total)
                throw internal_error("even closed trail changed the objective");
            continue;
        }

        // Odd cycle: if it meets an earlier odd cycle, their concatenation
        // at a shared vertex is an even closed trail and both vanish.
        int share_idx = -1, share_vertex = -1;
        for (std::size_t p = 0; p < pending.size() && share_idx < 0; ++p) {
            for (int v : cycle.vertices) {
                if (std::find(pending[p].vertices.begin(), pending[p].vertices.end(), v) !=
                    pending[p].vertices.end()) {
                    if (share_vertex < 0 || v < share_vertex) share_vertex = v;
                }
            }
            if (share_vertex >= 0) share_idx = static_cast<int>(p);
        }

        if (share_idx >= 0) {
            Trail t1 = pending[share_idx].as_trail_from(share_vertex);
            Trail t2 = cycle.as_trail_from(share_vertex);
            Trail joined;
            joined.vertices = t1.vertices;
            joined.vertices.insert(joined.vertices.end(), t2.vertices.begin() + 1,
                                   t2.vertices.end());
            joined.edges = t1.edges;
            joined.edges.insert(joined.edges.end(), t2.edges.begin(), t2.edges.end());
            apply_trail_ops(inst, x, joined);
            if (weight_half_units(inst, x) != w2_total)
                throw internal_error("odd-odd concatenation changed the objective");
            pending.erase(pending.begin() + share_idx);
        } else {
            pending.push_back(std::move(cycle));
        }
    }

    // The fractional support must now be exactly the pending cycles:
    // vertex-disjoint, every support vertex of degree 2, every length odd.
    std::vector<char> cycle_edges(inst.edge_count(), 0);
    std::vector<char> cycle_verts(inst.vertex_count(), 0);
    for (auto& c : pending) {
        if (c.length() < 3 || c.length() % 2 == 0)
            throw internal_error("canonical cycle has invalid length");
        for (int e : c.edges) {
            if (cycle_edges[e]) throw internal_error("canonical cycles share an edge");
            cycle_edges[e] = 1;
        }
        for (int v : c.vertices) {
            if (cycle_verts[v]) throw internal_error("canonical cycles share a vertex");
            cycle_verts[v] = 1;
        }
    }
    auto support = fractional_support(x);
    std::size_t marked = 0;
    for (int e = 0; e < inst.edge_count(); ++e) marked += cycle_edges[e] ? 1 : 0;
    if (marked != support.size())
        throw internal_error("canonical support does not match its cycles");
    for (int e : support)
        if (!cycle_edges[e]) throw internal_error("support edge outside all cycles");

    OddCycleSet set;
    set.cycles = std::move(pending);
    return {std::move(x), std::move(set)};
}

CanonicalResult canonicalize(const Instance& inst, const HalfMatching& x, const DualCover& y) {
    check_certificate(inst, x, y);

    HalfMatching x1 = eliminate_odd_degree(inst, x, y);
    auto [x2, cycles] = eliminate_even_closed_trails(inst, std::move(x1));

    for (auto& c : cycles.cycles) {
        c.b_min = inst.capacity[c.vertices[0]];
        c.twice_y_min = y.twice_y[c.vertices[0]];
        c.min_dual_vertex = c.vertices[0];
        for (int v : c.vertices) {
            c.b_min = std::min(c.b_min, inst.capacity[v]);
            if (y.twice_y[v] < c.twice_y_min ||
                (y.twice_y[v] == c.twice_y_min && v < c.min_dual_vertex)) {
                c.twice_y_min = y.twice_y[v];
                c.min_dual_vertex = v;
            }
        }
    }

    if (weight_half_units(inst, x2) != weight_half_units(inst, x))
        throw internal_error("canonicalization changed the objective");
    check_certificate(inst, x2, y);

    return {std::move(x2), std::move(cycles)};
}

} // namespace bmgame
