#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bmgame/canonical.hpp"
#include "bmgame/rational.hpp"

namespace bmgame {

// The computed allocation together with everything needed to audit it:
// the guarantee factor, the rounded integral matching witnessing the
// budget, both LP objectives, and per-cycle summaries.
struct AllocationReport {
    std::string instance_name;
    std::vector<Rat> allocation;      // a_i per vertex, exact
    Rat alpha{1};                     // 1 - 1/(l_min * b_min), or 1 without cycles
    std::vector<i64> rounded_twice_x; // 2 * x'_e, always even
    Rat lp_value;                     // w(G, x)
    Rat dual_value;                   // b(G, y)
    Rat rounding_loss;                // sum of y_C over cycles
    OddCycleSet cycles;

    Rat allocation_total() const;
    Rat rounded_weight(const Instance& inst) const; // w(G, x')
};

// Rounds every canonical odd cycle to integrality by running the trail
// operations from a vertex of minimum dual (lowest id on ties). Returns the
// integral matching and the exact total loss sum_C y_C; asserts
// w(G,x') == w(G,x) - loss.
std::pair<HalfMatching, Rat> round_odd_cycles(const Instance& inst, const HalfMatching& x,
                                              const DualCover& y, const OddCycleSet& cycles);

// The allocation rule on a certified canonical optimum:
//   a_i = (1 - 1/(l_C * b_i)) * b_i * y_i   for i on cycle C,
//   a_i = b_i * y_i                          otherwise.
AllocationReport allocate(const Instance& inst, const HalfMatching& x, const DualCover& y,
                          const OddCycleSet& cycles);

// 1 - 1/(l_min * b_min) over the realized cycles, 1 when there are none.
// Always at least 2/3.
Rat guarantee_bound(const OddCycleSet& cycles);

// Convenience composition of the full pipeline: solve, canonicalize,
// allocate.
AllocationReport run_pipeline(const Instance& inst);

// JSON document for the report (canonical, byte-deterministic).
std::string save_report(const Instance& inst, const AllocationReport& report);

// Reads back at least {alpha, allocation} from a report document, e.g. to
// audit an externally supplied allocation. Vertices missing from the
// document get allocation 0.
AllocationReport load_report_allocation(const Instance& inst, const std::string& text);

} // namespace bmgame
