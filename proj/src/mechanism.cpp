#include "bmgame/mechanism.hpp"


#include <json.hpp>

namespace bmgame {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json id_json(const std::string& id) {
    if (id_prints_as_int(id)) return ordered_json(std::stoll(id));
    return ordered_json(id);
}

} // namespace

Rat AllocationReport::allocation_total() const {
    Rat total;
    for (const Rat& a : allocation) total += a;
    return total;
}

Rat AllocationReport::rounded_weight(const Instance& inst) const {
    i64 w2 = 0;
    for (int e = 0; e < inst.edge_count(); ++e) w2 += inst.edges[e].w * rounded_twice_x[e];
    return Rat::from_half_units(w2);
}

std::pair<HalfMatching, Rat> round_odd_cycles(const Instance& inst, const HalfMatching& x,
                                              const DualCover& y, const OddCycleSet& cycles) {
    HalfMatching rounded = x;
    i64 twice_loss = 0;
    for (const auto& c : cycles.cycles) {
        if (y.twice_y[c.min_dual_vertex] != c.twice_y_min)
            throw internal_error("cycle dual annotation disagrees with the cover");
        i64 before = weight_half_units(inst, rounded);
        apply_trail_ops(inst, rounded, c.as_trail_from(c.min_dual_vertex));
        i64 after = weight_half_units(inst, rounded);
        if (before - after != c.twice_y_min)
            throw internal_error("odd-cycle rounding lost " + std::to_string(before - after) +
                                 " half-units, expected " + std::to_string(c.twice_y_min));
        twice_loss += c.twice_y_min;
    }

    for (i64 t : rounded.twice_x)
        if (t % 2 != 0) throw internal_error("rounded matching is not integral");
    check_matching_feasible(inst, rounded);
    if (weight_half_units(inst, rounded) != weight_half_units(inst, x) - twice_loss)
        throw internal_error("rounding loss identity failed");

    return {std::move(rounded), Rat::from_half_units(twice_loss)};
}

Rat guarantee_bound(const OddCycleSet& cycles) {
    if (cycles.empty()) return Rat(1);
    Rat bound = Rat(1) - Rat(1, static_cast<long long>(cycles.l_min()) * cycles.b_min());
    if (bound < Rat(2, 3)) throw internal_error("guarantee below 2/3");
    return bound;
}

AllocationReport allocate(const Instance& inst, const HalfMatching& x, const DualCover& y,
                          const OddCycleSet& cycles) {
    check_certificate(inst, x, y);

    AllocationReport report;
    report.instance_name = inst.name;
    report.lp_value = Rat::from_half_units(weight_half_units(inst, x));
    report.dual_value = Rat::from_half_units(cover_half_units(inst, y));
    report.alpha = guarantee_bound(cycles);
    report.cycles = cycles;

    auto [rounded, loss] = round_odd_cycles(inst, x, y, cycles);
    report.rounded_twice_x = rounded.twice_x;
    report.rounding_loss = loss;

    std::vector<int> cycle_of(inst.vertex_count(), -1);
    for (std::size_t c = 0; c < cycles.cycles.size(); ++c)
        for (int v : cycles.cycles[c].vertices) cycle_of[v] = static_cast<int>(c);

    report.allocation.resize(inst.vertex_count());
    for (int i = 0; i < inst.vertex_count(); ++i) {
        Rat base = Rat(inst.capacity[i]) * Rat::from_half_units(y.twice_y[i]);
        if (cycle_of[i] >= 0) {
            long long l = cycles.cycles[cycle_of[i]].length();
            report.allocation[i] = (Rat(1) - Rat(1, l * inst.capacity[i])) * base;
        } else {
            report.allocation[i] = base;
        }
        if (report.allocation[i] < Rat(0)) throw internal_error("negative allocation");
        if (report.allocation[i] < report.alpha * base)
            throw internal_error("allocation below its dual guarantee at vertex '" +
                                 inst.vertex_ids[i] + "'");
    }

    // Budget chain: the payout never exceeds the weight of the rounded
    // integral matching, which is itself a feasible candidate for the
    // grand-coalition value.
    Rat x_prime_weight = report.rounded_weight(inst);
    if (report.allocation_total() > x_prime_weight)
        throw internal_error("allocation exceeds the rounded matching weight");
    if (x_prime_weight != report.lp_value - report.rounding_loss)
        throw internal_error("rounded weight does not match lp value minus loss");

    return report;
}

AllocationReport run_pipeline(const Instance& inst) {
    SolveResult sol = solve_certified(inst);
    CanonicalResult canon = canonicalize(inst, sol.x, sol.y);
    return allocate(inst, canon.x, sol.y, canon.cycles);
}

std::string save_report(const Instance& inst, const AllocationReport& report) {
    ordered_json doc;
    if (!report.instance_name.empty()) doc["instance"] = report.instance_name;
    doc["lp_value"] = report.lp_value.to_string();
    doc["dual_value"] = report.dual_value.to_string();
    doc["alpha"] = report.alpha.to_string();
    doc["rounding_loss"] = report.rounding_loss.to_string();

    doc["allocation"] = ordered_json::array();
    Rat total;
    for (int i = 0; i < inst.vertex_count(); ++i) {
        ordered_json ja;
        ja["id"] = id_json(inst.vertex_ids[i]);
        ja["a"] = report.allocation[i].to_string();
        doc["allocation"].push_back(std::move(ja));
        total += report.allocation[i];
    }
    doc["allocation_total"] = total.to_string();

    doc["rounded_matching"] = ordered_json::array();
    for (int e = 0; e < inst.edge_count(); ++e) {
        ordered_json je;
        je["u"] = id_json(inst.vertex_ids[inst.edges[e].u]);
        je["v"] = id_json(inst.vertex_ids[inst.edges[e].v]);
        je["x"] = report.rounded_twice_x[e] / 2;
        doc["rounded_matching"].push_back(std::move(je));
    }

    doc["cycles"] = ordered_json::array();
    for (const auto& c : report.cycles.cycles) {
        ordered_json jc;
        jc["vertices"] = ordered_json::array();
        for (int v : c.vertices) jc["vertices"].push_back(id_json(inst.vertex_ids[v]));
        jc["length"] = c.length();
        jc["b_min"] = c.b_min;
        jc["y_min"] = Rat::from_half_units(c.twice_y_min).to_string();
        jc["loss_vertex"] = id_json(inst.vertex_ids[c.min_dual_vertex]);
        jc["factor"] =
            (Rat(1) - Rat(1, static_cast<long long>(c.length()) * c.b_min)).to_string();
        doc["cycles"].push_back(std::move(jc));
    }

    return doc.dump(2) + "\n";
}

AllocationReport load_report_allocation(const Instance& inst, const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("invalid report JSON: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("alpha") || !doc.contains("allocation"))
        throw parse_error("report document needs 'alpha' and 'allocation'");

    AllocationReport report;
    report.instance_name = inst.name;
    if (!doc["alpha"].is_string()) throw parse_error("'alpha' must be a rational string");
    report.alpha = Rat::parse(doc["alpha"].get<std::string>());
    report.allocation.assign(inst.vertex_count(), Rat(0));
    if (!doc["allocation"].is_array()) throw parse_error("'allocation' must be an array");
    for (auto& ja : doc["allocation"]) {
        if (!ja.is_object() || !ja.contains("id") || !ja.contains("a"))
            throw parse_error("each allocation entry needs 'id' and 'a'");
        std::string id = ja["id"].is_string() ? ja["id"].get<std::string>()
                                              : std::to_string(ja["id"].get<long long>());
        int v = inst.index_of(id);
        if (v < 0) throw validation_error("allocation names unknown vertex '" + id + "'");
        if (!ja["a"].is_string()) throw parse_error("allocation value must be a rational string");
        report.allocation[v] = Rat::parse(ja["a"].get<std::string>());
    }
    report.rounded_twice_x.assign(inst.edge_count(), 0);
    return report;
}

} // namespace bmgame
