#include "bmgame/oracle.hpp"

#include <algorithm>

#include <json.hpp>

namespace bmgame {

using ordered_json = nlohmann::ordered_json;

namespace {

// Branch-and-bound maximizer over the integral vectors satisfying the
// capacity constraints of the induced subgraph.
class GammaSearch {
public:
    GammaSearch(const Instance& inst, const std::vector<int>& induced_edges,
                const std::vector<char>& in_coalition, i64& node_pool)
        : inst_(inst), edges_(induced_edges), nodes_(node_pool) {
        rem_.resize(inst.vertex_count(), 0);
        for (int v = 0; v < inst.vertex_count(); ++v)
            if (in_coalition[v]) rem_[v] = inst.capacity[v];

        // suffix_maxw_[k][v]: heaviest induced edge at v among positions >= k
        const int m = static_cast<int>(edges_.size());
        suffix_maxw_.assign(m + 1, std::vector<i64>(inst.vertex_count(), 0));
        for (int k = m - 1; k >= 0; --k) {
            suffix_maxw_[k] = suffix_maxw_[k + 1];
            const auto& e = inst.edges[edges_[k]];
            suffix_maxw_[k][e.u] = std::max(suffix_maxw_[k][e.u], e.w);
            suffix_maxw_[k][e.v] = std::max(suffix_maxw_[k][e.v], e.w);
        }
    }

    void run() {
        assigned_.assign(edges_.size(), 0);
        descend(0, 0);
    }

    i64 best() const { return best_; }
    const std::vector<i64>& best_assignment() const { return best_assigned_; }

private:
    // Two admissible bounds on what the suffix can still contribute: each
    // suffix edge at its own capacity bound, and half the remaining
    // capacity volume priced at the heaviest incident suffix edge.
    i64 suffix_bound(int k) const {
        i64 by_edges = 0;
        for (int j = k; j < static_cast<int>(edges_.size()); ++j) {
            const auto& e = inst_.edges[edges_[j]];
            by_edges += e.w * std::min(rem_[e.u], rem_[e.v]);
        }
        i64 by_volume = 0;
        for (int v = 0; v < inst_.vertex_count(); ++v)
            by_volume += suffix_maxw_[k][v] * rem_[v];
        return std::min(by_edges, by_volume / 2);
    }

    void descend(int k, i64 current) {
        if (--nodes_ < 0) throw budget_error("oracle search budget exhausted");
        if (k == static_cast<int>(edges_.size())) {
            if (current > best_) {
                best_ = current;
                best_assigned_ = assigned_;
            }
            return;
        }
        if (best_ >= 0 && current + suffix_bound(k) <= best_) return;

        const auto& e = inst_.edges[edges_[k]];
        i64 hi = std::min(rem_[e.u], rem_[e.v]);
        for (i64 val = hi; val >= 0; --val) {
            assigned_[k] = val;
            rem_[e.u] -= val;
            rem_[e.v] -= val;
            descend(k + 1, current + e.w * val);
            rem_[e.u] += val;
            rem_[e.v] += val;
        }
        assigned_[k] = 0;
    }

    const Instance& inst_;
    const std::vector<int>& edges_;
    i64& nodes_;
    std::vector<i64> rem_;
    std::vector<std::vector<i64>> suffix_maxw_;
    std::vector<i64> assigned_;
    std::vector<i64> best_assigned_;
    i64 best_ = -1;
};

std::vector<int> induced_edge_indices(const Instance& inst, const std::vector<char>& in_set) {
    std::vector<int> edges;
    for (int e = 0; e < inst.edge_count(); ++e)
        if (in_set[inst.edges[e].u] && in_set[inst.edges[e].v]) edges.push_back(e);
    return edges;
}

GameValue gamma_on_mask(const Instance& inst, const std::vector<char>& in_set,
                        Coalition coalition, i64& node_pool) {
    GameValue gv;
    gv.coalition = std::move(coalition);
    gv.witness.assign(inst.edge_count(), 0);

    auto edges = induced_edge_indices(inst, in_set);
    if (edges.empty()) return gv;

    GammaSearch search(inst, edges, in_set, node_pool);
    search.run();
    gv.gamma = search.best();
    for (std::size_t k = 0; k < edges.size(); ++k)
        gv.witness[edges[k]] = search.best_assignment()[k];
    return gv;
}

CoreAudit audit_impl(const Instance& inst, const AllocationReport& report, const Rat& alpha,
                     i64 budget) {
    const int n = inst.vertex_count();
    if (n >= 26)
        throw budget_error("coalition space 2^" + std::to_string(n) +
                           " exceeds the exhaustive audit range");
    if (static_cast<int>(report.allocation.size()) != n)
        throw internal_error("allocation size mismatch in audit");
    for (const Rat& a : report.allocation)
        if (a < Rat(0)) throw validation_error("audited allocation has a negative entry");

    CoreAudit audit;
    audit.alpha_claimed = alpha;

    i64 pool = budget;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<char> in_set(n, 0);

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<int> members;
        Rat allocated;
        for (int v = 0; v < n; ++v) {
            bool in = (mask >> v) & 1u;
            in_set[v] = in ? 1 : 0;
            if (in) {
                members.push_back(v);
                allocated += report.allocation[v];
            }
        }
        ++audit.coalitions_checked;

        bool has_edge = false;
        for (auto& e : inst.edges)
            if (in_set[e.u] && in_set[e.v]) {
                has_edge = true;
                break;
            }

        i64 gamma = 0;
        if (has_edge) {
            GameValue gv = gamma_on_mask(inst, in_set, Coalition{members}, pool);
            gamma = gv.gamma;
        }

        Rat threshold = alpha * Rat(gamma);
        if (allocated < threshold)
            audit.violations.push_back({Coalition{members}, gamma, allocated});
        else if (allocated == threshold || allocated == Rat(gamma))
            audit.tight_coalitions.push_back({Coalition{members}, gamma, allocated});

        if (mask == full) {
            audit.grand_gamma = gamma;
            audit.grand_allocated = allocated;
            audit.budget_ok = allocated <= Rat(gamma);
        }
    }
    return audit;
}

ordered_json coalition_json(const Instance& inst, const Coalition& c) {
    ordered_json arr = ordered_json::array();
    for (int v : c.members) {
        const std::string& id = inst.vertex_ids[v];
        if (id_prints_as_int(id))
            arr.push_back(std::stoll(id));
        else
            arr.push_back(id);
    }
    return arr;
}

} // namespace

GameValue gamma_exact(const Instance& inst, const Coalition& coalition, i64 budget) {
    std::vector<char> in_set(inst.vertex_count(), 0);
    for (int v : coalition.members) {
        if (v < 0 || v >= inst.vertex_count())
            throw validation_error("coalition member index out of range");
        in_set[v] = 1;
    }
    i64 pool = budget;
    return gamma_on_mask(inst, in_set, coalition, pool);
}

CoreAudit audit_core(const Instance& inst, const AllocationReport& report, i64 budget) {
    return audit_impl(inst, report, report.alpha, budget);
}

CoreAudit audit_core_at(const Instance& inst, const AllocationReport& report, const Rat& alpha,
                        i64 budget) {
    return audit_impl(inst, report, alpha, budget);
}

GapResult integrality_gap(const Instance& inst, i64 budget) {
    SolveResult sol = solve_certified(inst);
    GapResult gap;
    gap.lp_value = Rat::from_half_units(weight_half_units(inst, sol.x));
    gap.ip_value = gamma_exact(inst, Coalition::grand(inst), budget).gamma;

    if (Rat(gap.ip_value) > gap.lp_value)
        throw internal_error("integral optimum exceeds the LP optimum");
    gap.ratio = gap.lp_value.is_zero() ? Rat(1) : Rat(gap.ip_value) / gap.lp_value;
    if (gap.ratio < Rat(2, 3))
        throw internal_error("integrality gap below 2/3: " + gap.ratio.to_string());
    return gap;
}

std::string save_audit(const Instance& inst, const CoreAudit& audit) {
    ordered_json doc;
    if (!inst.name.empty()) doc["instance"] = inst.name;
    doc["alpha"] = audit.alpha_claimed.to_string();
    doc["budget_ok"] = audit.budget_ok;
    doc["grand_gamma"] = audit.grand_gamma;
    doc["allocation_total"] = audit.grand_allocated.to_string();
    doc["coalitions_checked"] = audit.coalitions_checked;
    doc["in_core"] = audit.in_core();

    auto emit = [&](const std::vector<CoalitionCheck>& list) {
        ordered_json arr = ordered_json::array();
        for (const auto& c : list) {
            ordered_json jc;
            jc["coalition"] = coalition_json(inst, c.coalition);
            jc["gamma"] = c.gamma;
            jc["allocated"] = c.allocated.to_string();
            arr.push_back(std::move(jc));
        }
        return arr;
    };
    doc["violations"] = emit(audit.violations);
    doc["tight_coalitions"] = emit(audit.tight_coalitions);
    return doc.dump(2) + "\n";
}

} // namespace bmgame
