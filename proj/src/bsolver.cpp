#include "bmgame/bsolver.hpp"

#include <algorithm>
#include <limits>

namespace bmgame {

namespace {

constexpr i64 kInf = std::numeric_limits<i64>::max() / 4;

// ---------------------------------------------------------------------------
// Successive shortest paths on the doubled graph's flow network.
//
// Network: source -> i' (capacity b_i, cost 0), i' -> j'' per doubled edge
// (capacity min(b), cost -w), j'' -> sink (capacity b_j, cost 0). Augmenting
// only while the best residual path has strictly negative cost yields a
// maximum-weight integral b-matching of the doubled graph. Everything is
// integer; Bellman-Ford handles the negative arc costs exactly, and fixed
// arc order makes path selection deterministic.
// ---------------------------------------------------------------------------

struct FlowNetwork {
    struct Arc {
        int to;
        i64 cap;
        i64 cost;
        int rev; // index of the reverse arc in adj[to]
    };

    explicit FlowNetwork(int n) : adj(n) {}

    int add_arc(int from, int to, i64 cap, i64 cost) {
        adj[from].push_back({to, cap, cost, static_cast<int>(adj[to].size())});
        adj[to].push_back({from, 0, -cost, static_cast<int>(adj[from].size()) - 1});
        return static_cast<int>(adj[from].size()) - 1;
    }

    std::vector<std::vector<Arc>> adj;
};

std::vector<i64> max_weight_flow(const DoubledGraph& dg) {
    const int n = dg.n_orig;
    const int nodes = dg.vertex_count() + 2;
    const int source = dg.vertex_count();
    const int sink = dg.vertex_count() + 1;

    FlowNetwork net(nodes);
    for (int i = 0; i < n; ++i) net.add_arc(source, i, dg.cap[i], 0);
    std::vector<std::pair<int, int>> middle; // (from node, arc index) per doubled edge
    middle.reserve(dg.edges.size());
    for (auto& de : dg.edges) {
        i64 cap = std::min(dg.cap[de.left], dg.cap[de.right]);
        int idx = net.add_arc(de.left, de.right, cap, -de.w);
        middle.emplace_back(de.left, idx);
    }
    for (int i = 0; i < n; ++i) net.add_arc(n + i, sink, dg.cap[n + i], 0);

    std::vector<i64> dist(nodes);
    std::vector<std::pair<int, int>> parent(nodes); // (node, arc index)

    for (;;) {
        std::fill(dist.begin(), dist.end(), kInf);
        dist[source] = 0;
        bool changed = true;
        for (int pass = 0; pass <= nodes && changed; ++pass) {
            changed = false;
            for (int u = 0; u < nodes; ++u) {
                if (dist[u] >= kInf) continue;
                auto& arcs = net.adj[u];
                for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
                    if (arcs[a].cap <= 0) continue;
                    if (dist[u] + arcs[a].cost < dist[arcs[a].to]) {
                        dist[arcs[a].to] = dist[u] + arcs[a].cost;
                        parent[arcs[a].to] = {u, a};
                        changed = true;
                    }
                }
            }
        }
        if (changed) throw internal_error("negative cycle in flow residual graph");
        if (dist[sink] >= 0) break; // no strictly improving augmentation left

        i64 bottleneck = kInf;
        for (int v = sink; v != source;) {
            auto [u, a] = parent[v];
            bottleneck = std::min(bottleneck, net.adj[u][a].cap);
            v = u;
        }
        for (int v = sink; v != source;) {
            auto [u, a] = parent[v];
            auto& arc = net.adj[u][a];
            arc.cap -= bottleneck;
            net.adj[arc.to][arc.rev].cap += bottleneck;
            v = u;
        }
    }

    std::vector<i64> matching(dg.edges.size(), 0);
    for (std::size_t k = 0; k < dg.edges.size(); ++k) {
        auto [u, a] = middle[k];
        const auto& arc = net.adj[u][a];
        matching[k] = net.adj[arc.to][arc.rev].cap; // flow = reverse residual
    }
    return matching;
}

std::vector<i64> vertex_loads(const DoubledGraph& dg, const std::vector<i64>& matching) {
    std::vector<i64> load(dg.vertex_count(), 0);
    for (std::size_t k = 0; k < dg.edges.size(); ++k) {
        load[dg.edges[k].left] += matching[k];
        load[dg.edges[k].right] += matching[k];
    }
    return load;
}

void certify_doubled(const DoubledGraph& dg, const BipartiteSolution& sol) {
    auto load = vertex_loads(dg, sol.matching);
    for (int v = 0; v < dg.vertex_count(); ++v) {
        if (sol.cover[v] < 0) throw internal_error("negative cover entry in doubled graph");
        if (load[v] > dg.cap[v]) throw internal_error("doubled matching exceeds a capacity");
    }
    i64 primal = 0, dual = 0;
    for (std::size_t k = 0; k < dg.edges.size(); ++k) {
        if (sol.matching[k] < 0) throw internal_error("negative matching entry");
        if (sol.cover[dg.edges[k].left] + sol.cover[dg.edges[k].right] < dg.edges[k].w)
            throw internal_error("doubled cover violates an edge constraint");
        primal += dg.edges[k].w * sol.matching[k];
    }
    for (int v = 0; v < dg.vertex_count(); ++v) dual += dg.cap[v] * sol.cover[v];
    if (primal != dual)
        throw internal_error("doubled certificate failed: matching weight " +
                             std::to_string(primal) + " != cover value " +
                             std::to_string(dual));
}

// Copies the optimum of the first component onto the second. Only valid
// when `coloring` properly 2-colors the original instance: the doubled
// graph then splits into two disjoint components exchanged by the mirror
// map, so both have equal optima and the copy preserves global optimality.
void mirror_onto_second_copy(const DoubledGraph& dg, const std::vector<int>& coloring,
                             std::vector<i64>& matching) {
    i64 before = 0, after = 0;
    for (std::size_t k = 0; k < dg.edges.size(); ++k) before += dg.edges[k].w * matching[k];
    for (int e = 0; e < dg.m_orig; ++e) {
        int u_orig = dg.edges[2 * e].left; // left endpoint of copy 2e is u'
        int first = coloring[u_orig] == 0 ? 2 * e : 2 * e + 1;
        matching[first ^ 1] = matching[first];
    }
    for (std::size_t k = 0; k < dg.edges.size(); ++k) after += dg.edges[k].w * matching[k];
    if (before != after)
        throw internal_error("mirroring changed the doubled objective (" +
                             std::to_string(before) + " -> " + std::to_string(after) + ")");
    auto load = vertex_loads(dg, matching);
    for (int v = 0; v < dg.vertex_count(); ++v)
        if (load[v] > dg.cap[v]) throw internal_error("mirrored matching is infeasible");
}

} // namespace

DoubledGraph build_doubled(const Instance& inst) {
    DoubledGraph dg;
    dg.n_orig = inst.vertex_count();
    dg.m_orig = inst.edge_count();
    dg.cap.resize(2 * dg.n_orig);
    for (int i = 0; i < dg.n_orig; ++i) dg.cap[i] = dg.cap[dg.n_orig + i] = inst.capacity[i];
    dg.edges.reserve(2 * inst.edges.size());
    for (auto& e : inst.edges) {
        dg.edges.push_back({e.u, dg.n_orig + e.v, e.w}); // u' -- v''
        dg.edges.push_back({e.v, dg.n_orig + e.u, e.w}); // v' -- u''
    }
    return dg;
}

std::vector<i64> cover_from_slackness(const DoubledGraph& dg,
                                      const std::vector<i64>& matching) {
    // Difference-constraint system over potentials z (z = yhat on the left
    // side, z = -yhat on the right side, z = 0 at a root node):
    //   every doubled edge ij:      yhat_i + yhat_j >= w   ->  z_j <= z_i - w
    //   matched edge (xhat > 0):    yhat_i + yhat_j <= w   ->  z_i <= z_j + w
    //   yhat >= 0, yhat <= Wmax, and yhat = 0 at unsaturated vertices.
    // Any optimal cover satisfies all of these (they are exactly the
    // complementary-slackness conditions), so Bellman-Ford from the root
    // finds integral potentials unless the matching was not optimal.
    const int n2 = dg.vertex_count();
    const int root = n2;
    const int n = dg.n_orig;

    i64 wmax = 0;
    for (auto& de : dg.edges) wmax = std::max(wmax, de.w);
    auto load = vertex_loads(dg, matching);

    struct CArc {
        int from, to;
        i64 w;
    };
    std::vector<CArc> arcs;
    arcs.reserve(dg.edges.size() * 2 + n2 * 2);
    for (std::size_t k = 0; k < dg.edges.size(); ++k) {
        const auto& de = dg.edges[k];
        arcs.push_back({de.left, de.right, -de.w});
        if (matching[k] > 0) arcs.push_back({de.right, de.left, de.w});
    }
    for (int i = 0; i < n; ++i) {
        arcs.push_back({i, root, 0});       // yhat_i >= 0
        arcs.push_back({root, i, wmax});    // yhat_i <= Wmax
        if (load[i] < dg.cap[i]) arcs.push_back({root, i, 0}); // slack => yhat_i = 0
    }
    for (int j = n; j < n2; ++j) {
        arcs.push_back({root, j, 0});       // yhat_j >= 0
        arcs.push_back({j, root, wmax});    // yhat_j <= Wmax
        if (load[j] < dg.cap[j]) arcs.push_back({j, root, 0}); // slack => yhat_j = 0
    }

    std::vector<i64> dist(n2 + 1, kInf);
    dist[root] = 0;
    bool changed = true;
    for (int pass = 0; pass <= n2 + 1 && changed; ++pass) {
        changed = false;
        for (auto& a : arcs) {
            if (dist[a.from] >= kInf) continue;
            if (dist[a.from] + a.w < dist[a.to]) {
                dist[a.to] = dist[a.from] + a.w;
                changed = true;
            }
        }
    }
    if (changed)
        throw internal_error("slackness system infeasible: matching is not optimal");

    std::vector<i64> cover(n2, 0);
    for (int i = 0; i < n; ++i) cover[i] = dist[i];
    for (int j = n; j < n2; ++j) cover[j] = -dist[j];
    return cover;
}

BipartiteSolution solve_bipartite_certified(const DoubledGraph& dg,
                                            const std::vector<int>* mirror_coloring) {
    BipartiteSolution sol;
    sol.matching = max_weight_flow(dg);
    if (mirror_coloring != nullptr) mirror_onto_second_copy(dg, *mirror_coloring, sol.matching);
    sol.cover = cover_from_slackness(dg, sol.matching);
    certify_doubled(dg, sol);
    return sol;
}

FoldResult fold_back(const DoubledGraph& dg, const BipartiteSolution& sol) {
    FoldResult r;
    r.x.twice_x.resize(dg.m_orig);
    r.y.twice_y.resize(dg.n_orig);
    for (int e = 0; e < dg.m_orig; ++e)
        r.x.twice_x[e] = sol.matching[2 * e] + sol.matching[2 * e + 1];
    for (int i = 0; i < dg.n_orig; ++i)
        r.y.twice_y[i] = sol.cover[i] + sol.cover[dg.n_orig + i];

    // Folded feasibility and the exact strong-duality certificate, stated
    // on the doubled data so the fold needs no access to the instance.
    std::vector<i64> xsum(dg.n_orig, 0);
    i64 w2 = 0, b2 = 0;
    for (int e = 0; e < dg.m_orig; ++e) {
        if (r.x.twice_x[e] < 0) throw internal_error("negative folded matching value");
        int u = dg.edges[2 * e].left;
        int v = dg.edges[2 * e].right - dg.n_orig;
        xsum[u] += r.x.twice_x[e];
        xsum[v] += r.x.twice_x[e];
        if (r.y.twice_y[u] + r.y.twice_y[v] < 2 * dg.edges[2 * e].w)
            throw internal_error("folded cover violates an edge constraint");
        w2 += dg.edges[2 * e].w * r.x.twice_x[e];
    }
    for (int i = 0; i < dg.n_orig; ++i) {
        if (xsum[i] > 2 * dg.cap[i])
            throw internal_error("folded matching violates a capacity");
        if (r.y.twice_y[i] < 0) throw internal_error("negative folded cover value");
        b2 += dg.cap[i] * r.y.twice_y[i];
    }
    if (w2 != b2)
        throw internal_error("folded certificate failed: " + std::to_string(w2) +
                             " != " + std::to_string(b2));
    return r;
}

SolveResult solve_certified(const Instance& inst) {
    DoubledGraph dg = build_doubled(inst);
    auto coloring = two_coloring(inst);
    BipartiteSolution sol =
        solve_bipartite_certified(dg, coloring ? &*coloring : nullptr);
    FoldResult folded = fold_back(dg, sol);
    check_certificate(inst, folded.x, folded.y);
    if (coloring) {
        for (i64 t : folded.x.twice_x)
            if (t % 2 != 0)
                throw internal_error("bipartite instance produced a fractional matching");
    }
    return {std::move(folded.x), std::move(folded.y)};
}

i64 weight_half_units(const Instance& inst, const HalfMatching& x) {
    i64 total = 0;
    for (int e = 0; e < inst.edge_count(); ++e) total += inst.edges[e].w * x.twice_x[e];
    return total;
}

i64 cover_half_units(const Instance& inst, const DualCover& y) {
    i64 total = 0;
    for (int i = 0; i < inst.vertex_count(); ++i) total += inst.capacity[i] * y.twice_y[i];
    return total;
}

void check_matching_feasible(const Instance& inst, const HalfMatching& x) {
    if (static_cast<int>(x.twice_x.size()) != inst.edge_count())
        throw internal_error("matching size mismatch");
    std::vector<i64> sum(inst.vertex_count(), 0);
    for (int e = 0; e < inst.edge_count(); ++e) {
        if (x.twice_x[e] < 0) throw internal_error("negative matching value");
        sum[inst.edges[e].u] += x.twice_x[e];
        sum[inst.edges[e].v] += x.twice_x[e];
    }
    for (int i = 0; i < inst.vertex_count(); ++i)
        if (sum[i] > 2 * inst.capacity[i])
            throw internal_error("capacity exceeded at vertex '" + inst.vertex_ids[i] + "'");
}

void check_cover_feasible(const Instance& inst, const DualCover& y) {
    if (static_cast<int>(y.twice_y.size()) != inst.vertex_count())
        throw internal_error("cover size mismatch");
    for (int i = 0; i < inst.vertex_count(); ++i)
        if (y.twice_y[i] < 0) throw internal_error("negative cover value");
    for (auto& e : inst.edges)
        if (y.twice_y[e.u] + y.twice_y[e.v] < 2 * e.w)
            throw internal_error("cover violates edge ('" + inst.vertex_ids[e.u] + "','" +
                                 inst.vertex_ids[e.v] + "')");
}

void check_certificate(const Instance& inst, const HalfMatching& x, const DualCover& y) {
    check_matching_feasible(inst, x);
    check_cover_feasible(inst, y);
    if (weight_half_units(inst, x) != cover_half_units(inst, y))
        throw internal_error("certificate failed: objectives differ");

    std::vector<i64> sum(inst.vertex_count(), 0);
    for (int e = 0; e < inst.edge_count(); ++e) {
        sum[inst.edges[e].u] += x.twice_x[e];
        sum[inst.edges[e].v] += x.twice_x[e];
    }
    for (int e = 0; e < inst.edge_count(); ++e) {
        const auto& ed = inst.edges[e];
        if (x.twice_x[e] != 0 && y.twice_y[ed.u] + y.twice_y[ed.v] != 2 * ed.w)
            throw internal_error("complementary slackness fails on edge ('" +
                                 inst.vertex_ids[ed.u] + "','" + inst.vertex_ids[ed.v] + "')");
    }
    for (int i = 0; i < inst.vertex_count(); ++i)
        if (y.twice_y[i] != 0 && sum[i] != 2 * inst.capacity[i])
            throw internal_error("complementary slackness fails at vertex '" +
                                 inst.vertex_ids[i] + "'");
}

} // namespace bmgame
