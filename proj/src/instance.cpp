#include "bmgame/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

#include "bmgame/rational.hpp"

namespace bmgame {

using ordered_json = nlohmann::ordered_json;

int Instance::index_of(const std::string& id) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertex_ids[i] == id) return i;
    return -1;
}

std::vector<std::vector<int>> Instance::incidence() const {
    std::vector<std::vector<int>> inc(vertex_count());
    for (int e = 0; e < edge_count(); ++e) {
        inc[edges[e].u].push_back(e);
        inc[edges[e].v].push_back(e);
    }
    return inc;
}

bool Instance::edges_equal(const Instance& o) const {
    if (edges.size() != o.edges.size()) return false;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].u != o.edges[i].u || edges[i].v != o.edges[i].v ||
            edges[i].w != o.edges[i].w)
            return false;
    return true;
}

Coalition Coalition::of(std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return Coalition{std::move(verts)};
}

Coalition Coalition::grand(const Instance& inst) {
    std::vector<int> all(inst.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return Coalition{std::move(all)};
}

bool Coalition::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

void validate_instance(Instance& inst) {
    const int n = inst.vertex_count();
    if (static_cast<int>(inst.capacity.size()) != n)
        throw internal_error("capacity vector size mismatch");

    std::set<std::string> seen;
    for (int i = 0; i < n; ++i) {
        if (!seen.insert(inst.vertex_ids[i]).second)
            throw validation_error("duplicate vertex id '" + inst.vertex_ids[i] + "'");
        if (inst.capacity[i] < 1)
            throw validation_error("capacity of vertex '" + inst.vertex_ids[i] +
                                   "' must be >= 1 (got " +
                                   std::to_string(inst.capacity[i]) + ")");
    }

    std::set<std::pair<int, int>> pairs;
    for (auto& e : inst.edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw internal_error("edge endpoint index out of range");
        if (e.u == e.v)
            throw validation_error("self-loop at vertex '" + inst.vertex_ids[e.u] + "'");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!pairs.insert({e.u, e.v}).second)
            throw validation_error("parallel edge between '" + inst.vertex_ids[e.u] +
                                   "' and '" + inst.vertex_ids[e.v] + "'");
        if (e.w < 0)
            throw validation_error("negative weight on edge ('" + inst.vertex_ids[e.u] +
                                   "','" + inst.vertex_ids[e.v] + "'): " +
                                   std::to_string(e.w));
    }
}

Instance build_instance(std::string name,
                        const std::vector<std::pair<std::string, i64>>& vertices,
                        const std::vector<std::tuple<std::string, std::string, i64>>& edges) {
    Instance inst;
    inst.name = std::move(name);
    for (auto& [id, b] : vertices) {
        inst.vertex_ids.push_back(id);
        inst.capacity.push_back(b);
    }
    for (auto& [uid, vid, w] : edges) {
        int u = inst.index_of(uid);
        int v = inst.index_of(vid);
        if (u < 0)
            throw validation_error("edge endpoint '" + uid + "' is not a declared vertex");
        if (v < 0)
            throw validation_error("edge endpoint '" + vid + "' is not a declared vertex");
        inst.edges.push_back({u, v, w});
    }
    validate_instance(inst);
    return inst;
}

namespace {

std::string id_to_string(const ordered_json& j, const char* where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw parse_error(std::string(where) + ": vertex id must be a string or an integer");
}

i64 require_int(const ordered_json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw parse_error(where + " must be an integer");
    return j.get<i64>();
}

// Weight field: integer, or rational "p/q" kept exact for later scaling.
Rat weight_value(const ordered_json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        Rat r = Rat::parse(j.get<std::string>());
        return r;
    }
    throw parse_error(where + " must be an integer or a rational string \"p/q\"");
}

i64 lcm_i64(i64 a, i64 b) {
    return a / std::gcd(a, b) * b;
}

} // namespace

bool id_prints_as_int(const std::string& s) {
    if (s.empty() || s.size() > 18) return false;
    if (s.size() > 1 && s[0] == '0') return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Instance load_instance(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("invalid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw parse_error("instance document must be a JSON object");

    Instance inst;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw parse_error("'name' must be a string");
        inst.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw parse_error("'vertices' must be an array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw parse_error("'edges' must be an array");

    for (auto& jv : doc["vertices"]) {
        if (!jv.is_object() || !jv.contains("id") || !jv.contains("b"))
            throw parse_error("each vertex must be an object with 'id' and 'b'");
        inst.vertex_ids.push_back(id_to_string(jv["id"], "vertices"));
        inst.capacity.push_back(require_int(jv["b"], "vertex capacity 'b'"));
    }

    std::vector<Rat> weights;
    for (auto& je : doc["edges"]) {
        if (!je.is_object() || !je.contains("u") || !je.contains("v") || !je.contains("w"))
            throw parse_error("each edge must be an object with 'u', 'v' and 'w'");
        std::string uid = id_to_string(je["u"], "edges");
        std::string vid = id_to_string(je["v"], "edges");
        int u = inst.index_of(uid);
        if (u < 0) throw validation_error("edge endpoint '" + uid + "' is not a declared vertex");
        int v = inst.index_of(vid);
        if (v < 0) throw validation_error("edge endpoint '" + vid + "' is not a declared vertex");
        Rat w = weight_value(je["w"], "edge weight 'w' on ('" + uid + "','" + vid + "')");
        if (w < Rat(0))
            throw validation_error("negative weight on edge ('" + uid + "','" + vid +
                                   "'): " + w.to_string());
        inst.edges.push_back({u, v, 0});
        weights.push_back(w);
    }

    // Pre-scale rational weights to integers by the least common denominator.
    i64 scale = 1;
    for (auto& w : weights) scale = lcm_i64(scale, w.den());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        Rat scaled = weights[i] * Rat(scale);
        if (!scaled.is_integer()) throw internal_error("weight scaling failed");
        inst.edges[i].w = scaled.num();
    }

    validate_instance(inst);
    return inst;
}

std::string save_instance(const Instance& inst) {
    ordered_json doc;
    if (!inst.name.empty()) doc["name"] = inst.name;
    doc["vertices"] = ordered_json::array();
    for (int i = 0; i < inst.vertex_count(); ++i) {
        ordered_json jv;
        const std::string& id = inst.vertex_ids[i];
        if (id_prints_as_int(id))
            jv["id"] = std::stoll(id);
        else
            jv["id"] = id;
        jv["b"] = inst.capacity[i];
        doc["vertices"].push_back(std::move(jv));
    }
    doc["edges"] = ordered_json::array();
    for (auto& e : inst.edges) {
        ordered_json je;
        const std::string& uid = inst.vertex_ids[e.u];
        const std::string& vid = inst.vertex_ids[e.v];
        if (id_prints_as_int(uid)) je["u"] = std::stoll(uid); else je["u"] = uid;
        if (id_prints_as_int(vid)) je["v"] = std::stoll(vid); else je["v"] = vid;
        je["w"] = e.w;
        doc["edges"].push_back(std::move(je));
    }
    return doc.dump(2) + "\n";
}

std::optional<std::vector<int>> two_coloring(const Instance& inst) {
    const int n = inst.vertex_count();
    std::vector<int> color(n, -1);
    auto inc = inst.incidence();
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : inc[v]) {
                int u = inst.edges[e].u == v ? inst.edges[e].v : inst.edges[e].u;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

} // namespace bmgame
