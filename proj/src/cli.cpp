#include "bmgame/cli.hpp"

#include <fstream>
#include <ostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bmgame/generators.hpp"
#include "bmgame/oracle.hpp"

namespace bmgame {

using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string family;  // "n,l,b[,link]"
    std::string random;  // "n,p/q,max_b,max_w[,bip]"
    std::string alpha;   // override audit target
    std::string report;  // externally supplied allocation to audit
    std::uint64_t seed = 1;
    i64 budget = kDefaultOracleBudget;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

long long parse_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw parse_error("bad " + what + ": '" + s + "'");
    }
    if (pos != s.size()) throw parse_error("bad " + what + ": '" + s + "'");
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << content;
}

Instance generate(const Options& opt) {
    if (!opt.family.empty()) {
        auto parts = split(opt.family, ',');
        if (parts.size() != 3 && parts.size() != 4)
            throw parse_error("--family expects n,l,b[,link]");
        bool link = false;
        if (parts.size() == 4) {
            if (parts[3] != "link") throw parse_error("--family fourth item must be 'link'");
            link = true;
        }
        return gen_tight_family(static_cast<int>(parse_int(parts[0], "family n")),
                                static_cast<int>(parse_int(parts[1], "family l")),
                                parse_int(parts[2], "family b"), link);
    }
    auto parts = split(opt.random, ',');
    if (parts.size() != 4 && parts.size() != 5)
        throw parse_error("--random expects n,p/q,max_b,max_w[,bip]");
    bool bip = false;
    if (parts.size() == 5) {
        if (parts[4] != "bip") throw parse_error("--random fifth item must be 'bip'");
        bip = true;
    }
    return gen_random(static_cast<int>(parse_int(parts[0], "random n")), Rat::parse(parts[1]),
                      parse_int(parts[2], "random max_b"), parse_int(parts[3], "random max_w"),
                      opt.seed, bip);
}

Instance obtain_instance(const Options& opt) {
    int sources = (!opt.input.empty()) + (!opt.family.empty()) + (!opt.random.empty());
    if (sources != 1)
        throw parse_error("provide exactly one of --input, --family, --random");
    if (!opt.input.empty()) return load_instance(read_file(opt.input));
    return generate(opt);
}

void emit_document(const Options& opt, const std::string& doc, std::ostream& out,
                   bool stdout_fallback) {
    if (!opt.output.empty())
        write_file(opt.output, doc);
    else if (stdout_fallback)
        out << doc;
}

ordered_json id_json(const Instance& inst, int v) {
    const std::string& id = inst.vertex_ids[v];
    if (id_prints_as_int(id)) return ordered_json(std::stoll(id));
    return ordered_json(id);
}

std::string solution_document(const Instance& inst, const SolveResult& sol,
                              const CanonicalResult& canon) {
    ordered_json doc;
    if (!inst.name.empty()) doc["instance"] = inst.name;
    doc["lp_value"] = Rat::from_half_units(weight_half_units(inst, canon.x)).to_string();
    doc["dual_value"] = Rat::from_half_units(cover_half_units(inst, sol.y)).to_string();
    doc["x"] = ordered_json::array();
    for (int e = 0; e < inst.edge_count(); ++e) {
        ordered_json je;
        je["u"] = id_json(inst, inst.edges[e].u);
        je["v"] = id_json(inst, inst.edges[e].v);
        je["x"] = Rat::from_half_units(canon.x.twice_x[e]).to_string();
        doc["x"].push_back(std::move(je));
    }
    doc["y"] = ordered_json::array();
    for (int v = 0; v < inst.vertex_count(); ++v) {
        ordered_json jy;
        jy["id"] = id_json(inst, v);
        jy["y"] = Rat::from_half_units(sol.y.twice_y[v]).to_string();
        doc["y"].push_back(std::move(jy));
    }
    doc["cycles"] = ordered_json::array();
    for (const auto& c : canon.cycles.cycles) {
        ordered_json jc;
        jc["vertices"] = ordered_json::array();
        for (int v : c.vertices) jc["vertices"].push_back(id_json(inst, v));
        jc["length"] = c.length();
        doc["cycles"].push_back(std::move(jc));
    }
    return doc.dump(2) + "\n";
}

int cmd_gen(const Options& opt, std::ostream& out) {
    if (opt.family.empty() == opt.random.empty())
        throw parse_error("gen needs exactly one of --family, --random");
    Instance inst = generate(opt);
    emit_document(opt, save_instance(inst), out, true);
    return kExitOk;
}

int cmd_solve(const Options& opt, std::ostream& out) {
    Instance inst = obtain_instance(opt);
    SolveResult sol = solve_certified(inst);
    CanonicalResult canon = canonicalize(inst, sol.x, sol.y);
    emit_document(opt, solution_document(inst, sol, canon), out, true);
    return kExitOk;
}

int cmd_allocate(const Options& opt, std::ostream& out) {
    Instance inst = obtain_instance(opt);
    AllocationReport report = run_pipeline(inst);
    emit_document(opt, save_report(inst, report), out, true);
    return kExitOk;
}

int cmd_gamma(const Options& opt, std::ostream& out) {
    Instance inst = obtain_instance(opt);
    GameValue gv = gamma_exact(inst, Coalition::grand(inst), opt.budget);
    out << "gamma=" << gv.gamma << "\n";
    if (!opt.output.empty()) {
        ordered_json doc;
        if (!inst.name.empty()) doc["instance"] = inst.name;
        doc["gamma"] = gv.gamma;
        doc["witness"] = ordered_json::array();
        for (int e = 0; e < inst.edge_count(); ++e) {
            ordered_json je;
            je["u"] = id_json(inst, inst.edges[e].u);
            je["v"] = id_json(inst, inst.edges[e].v);
            je["x"] = gv.witness[e];
            doc["witness"].push_back(std::move(je));
        }
        write_file(opt.output, doc.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    Instance inst = obtain_instance(opt);
    AllocationReport report = opt.report.empty()
                                  ? run_pipeline(inst)
                                  : load_report_allocation(inst, read_file(opt.report));
    Rat alpha = opt.alpha.empty() ? report.alpha : Rat::parse(opt.alpha);
    CoreAudit audit = audit_core_at(inst, report, alpha, opt.budget);

    out << "in-core: " << (audit.in_core() ? "yes" : "no") << " alpha="
        << audit.alpha_claimed.to_string() << " violations=" << audit.violations.size()
        << " budget_ok=" << (audit.budget_ok ? "yes" : "no") << "\n";
    for (const auto& v : audit.violations) {
        out << "violation: coalition={";
        for (std::size_t i = 0; i < v.coalition.members.size(); ++i) {
            if (i) out << ",";
            out << inst.vertex_ids[v.coalition.members[i]];
        }
        out << "} gamma=" << v.gamma << " allocated=" << v.allocated.to_string() << "\n";
    }
    emit_document(opt, save_audit(inst, audit), out, false);
    return audit.in_core() ? kExitOk : kExitViolation;
}

int cmd_gap(const Options& opt, std::ostream& out) {
    Instance inst = obtain_instance(opt);
    GapResult gap = integrality_gap(inst, opt.budget);
    out << "ip=" << gap.ip_value << " lp=" << gap.lp_value.to_string()
        << " ratio=" << gap.ratio.to_string() << "\n";
    if (!opt.output.empty()) {
        ordered_json doc;
        if (!inst.name.empty()) doc["instance"] = inst.name;
        doc["ip"] = gap.ip_value;
        doc["lp"] = gap.lp_value.to_string();
        doc["ratio"] = gap.ratio.to_string();
        write_file(opt.output, doc.dump(2) + "\n");
    }
    return kExitOk;
}

void add_common_options(CLI::App* cmd, Options& opt, bool with_generators = true) {
    cmd->add_option("--input", opt.input, "instance document to read");
    cmd->add_option("--output", opt.output, "write the result document here");
    cmd->add_option("--seed", opt.seed, "seed for --random");
    cmd->add_option("--budget", opt.budget, "oracle search-node budget");
    if (with_generators) {
        cmd->add_option("--family", opt.family, "tight family parameters n,l,b[,link]");
        cmd->add_option("--random", opt.random, "random instance n,p/q,max_b,max_w[,bip]");
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Approximate core allocations for b-matching games"};
    app.require_subcommand(1);

    Options opt;
    auto* gen = app.add_subcommand("gen", "generate an instance document");
    add_common_options(gen, opt);
    auto* solve = app.add_subcommand("solve", "certified fractional optimum and its odd cycles");
    add_common_options(solve, opt);
    auto* allocate = app.add_subcommand("allocate", "full allocation report");
    add_common_options(allocate, opt);
    auto* gamma = app.add_subcommand("gamma", "exact grand-coalition value");
    add_common_options(gamma, opt);
    auto* verify = app.add_subcommand("verify", "allocate plus exhaustive core audit");
    add_common_options(verify, opt);
    verify->add_option("--alpha", opt.alpha, "audit target factor p/q (default: report alpha)");
    verify->add_option("--report", opt.report, "audit this allocation document instead");
    auto* gap = app.add_subcommand("gap", "integral optimum against the LP optimum");
    add_common_options(gap, opt);

    std::vector<const char*> argv;
    argv.push_back("bmgame");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (gen->parsed()) return cmd_gen(opt, out);
        if (solve->parsed()) return cmd_solve(opt, out);
        if (allocate->parsed()) return cmd_allocate(opt, out);
        if (gamma->parsed()) return cmd_gamma(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
        if (gap->parsed()) return cmd_gap(opt, out);
        err << "error: no command\n";
        return kExitInputError;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace bmgame
