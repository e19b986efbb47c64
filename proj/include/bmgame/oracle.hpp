#pragma once

#include <string>
#include <vector>

#include "bmgame/mechanism.hpp"

namespace bmgame {

inline constexpr i64 kDefaultOracleBudget = 10'000'000;

// Exact coalition value: gamma is the weight of a maximum integral
// b-matching of the induced subgraph, witness a maximizer (the first one
// met by the fixed search order, hence deterministic).
struct GameValue {
    Coalition coalition;
    i64 gamma = 0;
    std::vector<i64> witness; // per instance edge index; 0 outside G[S]
};

// Depth-first search over the induced edges in instance order, assigning
// each edge value from its remaining capacity bound down to 0, with two
// admissible upper bounds for pruning. Throws budget_error once more than
// `budget` search nodes have been expanded.
GameValue gamma_exact(const Instance& inst, const Coalition& coalition,
                      i64 budget = kDefaultOracleBudget);

struct CoalitionCheck {
    Coalition coalition;
    i64 gamma = 0;
    Rat allocated;
};

// Exhaustive audit of the two approximate-core conditions. `violations`
// lists every S with sum_{i in S} a_i < alpha * gamma(S); `tight` lists the
// coalitions paid exactly their threshold (alpha * gamma(S)) or exactly
// their stand-alone value gamma(S). All comparisons are exact rationals.
struct CoreAudit {
    Rat alpha_claimed;
    bool budget_ok = false;   // sum_N a_i <= gamma(N)
    i64 grand_gamma = 0;
    Rat grand_allocated;
    std::vector<CoalitionCheck> violations;
    std::vector<CoalitionCheck> tight_coalitions;
    i64 coalitions_checked = 0;

    bool in_core() const { return budget_ok && violations.empty(); }
};

// Audits the report's allocation at its own alpha. The node budget is a
// shared pool across all 2^n coalition searches.
CoreAudit audit_core(const Instance& inst, const AllocationReport& report,
                     i64 budget = kDefaultOracleBudget);

// Same audit at an explicit alpha (e.g. the universal 2/3).
CoreAudit audit_core_at(const Instance& inst, const AllocationReport& report, const Rat& alpha,
                        i64 budget = kDefaultOracleBudget);

// gamma(N) against the certified LP optimum. ratio = ip / lp (1 for the
// empty/zero instance); asserted to be >= 2/3 and <= 1.
struct GapResult {
    Rat ratio;
    Rat lp_value;
    i64 ip_value = 0;
};
GapResult integrality_gap(const Instance& inst, i64 budget = kDefaultOracleBudget);

std::string save_audit(const Instance& inst, const CoreAudit& audit);

} // namespace bmgame
