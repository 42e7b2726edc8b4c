#pragma once

#include <complex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spectra/batch.hpp"
#include "spectra/eigensolve.hpp"
#include "spectra/graph.hpp"
#include "spectra/operators.hpp"
#include "spectra/theorems.hpp"

namespace spectra {

using nlohmann::json;

// Raised for anything wrong with input JSON: syntax errors (with the line and
// column from the underlying parser) and semantic errors naming the offending
// entry. The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ParsedGraph {
    WeightedDigraph graph;
    std::vector<std::string> warnings;  // duplicate-edge merges and the like
};

namespace jsondetail {

// nlohmann prefixes messages with "[json.exception.parse_error.101] "; the
// part after the tag already carries line and byte position.
inline std::string strip_tag(const std::string& what) {
    if (!what.empty() && what.front() == '[') {
        auto pos = what.find("] ");
        if (pos != std::string::npos) return what.substr(pos + 2);
    }
    return what;
}

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(strip_tag(e.what()));
    }
}

// Ids may be written as JSON strings or integers; integers are taken as their
// decimal spelling.
inline VertexId id_from(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError(where + ": id must be a string or an integer");
}

inline double positive_number(const json& v, const std::string& where, const char* field) {
    if (!v.is_number()) throw ParseError(where + ": \"" + field + "\" must be a number");
    double x = v.get<double>();
    if (!(x > 0.0))
        throw ParseError(where + ": \"" + field + "\" must be positive, got " + v.dump());
    return x;
}

}  // namespace jsondetail

// Graph format: {"vertices":[{"id":"a","m":1.0},...],"edges":[{"from":"a","to":"b","b":1.0},...]}.
// m and b default to 1.0; duplicate (from,to) pairs merge by summing b, with a
// warning. Zero or negative weights, self-loops, and edges naming undeclared
// vertices are errors.
inline ParsedGraph parse_graph(const std::string& text) {
    json j = jsondetail::parse_text(text);
    if (!j.is_object()) throw ParseError("top level must be a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("missing \"vertices\" array");

    ParsedGraph out;
    WeightedDigraph& g = out.graph;

    size_t vi = 0;
    for (const auto& v : j["vertices"]) {
        std::string where = "vertices[" + std::to_string(vi++) + "]";
        VertexId id;
        double m = 1.0;
        if (v.is_object()) {
            if (!v.contains("id")) throw ParseError(where + ": missing \"id\"");
            id = jsondetail::id_from(v["id"], where);
            where = "vertex \"" + id + "\"";
            if (v.contains("m")) m = jsondetail::positive_number(v["m"], where, "m");
        } else {
            id = jsondetail::id_from(v, where);
        }
        if (g.has_vertex(id)) throw ParseError("vertex \"" + id + "\" declared twice");
        g.add_vertex(id, m);
    }
    if (g.size() == 0) throw ParseError("\"vertices\" array is empty");

    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        size_t ei = 0;
        for (const auto& e : j["edges"]) {
            std::string where = "edges[" + std::to_string(ei++) + "]";
            if (!e.is_object()) throw ParseError(where + ": must be an object");
            if (!e.contains("from") || !e.contains("to"))
                throw ParseError(where + ": missing \"from\" or \"to\"");
            VertexId from = jsondetail::id_from(e["from"], where);
            VertexId to = jsondetail::id_from(e["to"], where);
            where = "edge (\"" + from + "\" -> \"" + to + "\")";
            double b = 1.0;
            if (e.contains("b")) b = jsondetail::positive_number(e["b"], where, "b");
            if (from == to) throw ParseError(where + ": self-loops are not allowed");
            if (!g.has_vertex(from)) throw ParseError(where + ": unknown vertex \"" + from + "\"");
            if (!g.has_vertex(to)) throw ParseError(where + ": unknown vertex \"" + to + "\"");
            if (g.has_edge(from, to))
                out.warnings.push_back("duplicate " + where + " merged by summing b");
            g.add_edge(from, to, b);
        }
    }
    return out;
}

inline json graph_to_json(const WeightedDigraph& g) {
    json vertices = json::array();
    for (int i = 0; i < g.size(); ++i)
        vertices.push_back({{"id", g.id(i)}, {"m", g.measures()[static_cast<size_t>(i)]}});
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"from", e.from}, {"to", e.to}, {"b", e.b}});
    return json{{"vertices", vertices}, {"edges", edges}};
}

inline std::string serialize_graph(const WeightedDigraph& g, int indent = 2) {
    return graph_to_json(g).dump(indent) + "\n";
}

inline json complex_to_json(std::complex<double> z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

// Eigenvalue lists always serialize as arrays of {"re","im"} objects so real
// and complex spectra share one schema.
inline json eigenvalues_to_json(const std::vector<double>& w) {
    json a = json::array();
    for (double x : w) a.push_back(complex_to_json({x, 0.0}));
    return a;
}

inline json eigenvalues_to_json(const std::vector<std::complex<double>>& w) {
    json a = json::array();
    for (auto z : w) a.push_back(complex_to_json(z));
    return a;
}

inline json spectrum_report_json(const OperatorMatrix& op, const std::string& mode_name,
                                 const std::vector<std::complex<double>>& eigs,
                                 double residual) {
    return json{{"operator", to_string(op.kind)},
                {"mode", mode_name},
                {"n", op.size()},
                {"order", op.order},
                {"eigenvalues", eigenvalues_to_json(eigs)},
                {"residual", residual}};
}

inline json operator_to_json(const OperatorMatrix& a) {
    int n = a.size();
    json entries = json::array();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) entries.push_back(a.entries(i, j));
    json out{{"kind", to_string(a.kind)},
             {"n", n},
             {"order", a.order},
             {"measure", a.measure.values},
             {"entries", entries}};
    if (a.dirichlet_restricted) out["restricted_to"] = a.restricted_to;
    return out;
}

inline json certificate_to_json(const Certificate& c) {
    json checks = json::array();
    for (const auto& ck : c.checks)
        checks.push_back({{"desc", ck.desc},
                          {"lhs", ck.lhs},
                          {"rhs", ck.rhs},
                          {"margin", ck.margin},
                          {"tol", ck.tol},
                          {"asserted", ck.asserted},
                          {"holds", ck.holds()}});
    return json{{"theorem", to_string(c.theorem)},
                {"pass", c.pass},
                {"tolerance", c.tolerance},
                {"input_digest", c.input_digest},
                {"checks", checks},
                {"notes", c.notes}};
}

inline json validation_to_json(const ValidationReport& r) {
    json defects = json::object();
    for (const auto& [v, d] : r.beta_defect) defects[v] = d;
    return json{{"pass", r.all_pass()},
                {"has_loops", r.has_loops},
                {"weights_positive", r.weights_positive},
                {"hypothesis_cnx", r.hypothesis_cnx},
                {"connected", r.connected},
                {"strongly_connected", r.strongly_connected},
                {"beta_balanced", r.beta_balanced},
                {"worst_defect", r.worst_defect},
                {"worst_defect_vertex", r.worst_defect_vertex},
                {"tolerance_used", r.tolerance_used},
                {"beta_defect", defects}};
}

inline json partition_report_to_json(const PartitionReport& r) {
    return json{{"pass", r.all_pass()},
                {"disjoint_cover", r.disjoint_cover},
                {"edges_split", r.edges_split},
                {"boundaries_match", r.boundaries_match},
                {"interior_a", r.interior_a},
                {"interior_b", r.interior_b},
                {"interiors_nonempty", r.interiors_nonempty},
                {"detail", r.detail}};
}

inline json batch_result_to_json(const BatchResult& r) {
    json out{{"theorem", to_string(r.theorem)},
             {"trials", r.trials},
             {"passed", r.passed},
             {"failed", r.failed},
             {"min_margin", r.min_margin},
             {"min_margin_desc", r.min_margin_desc},
             {"failing_trials", r.failing_trials}};
    if (r.first_failure) out["first_failure"] = certificate_to_json(*r.first_failure);
    return out;
}

// Sidecar parameters for certificates that need more than one graph. All keys
// optional: {"subset":[ids],"core":[ids],"edge_set":[["a","b"],...],
//            "partition":{"a":[ids],"b":[ids]},"second":{graph json}}.
struct CertifyParams {
    std::optional<std::set<VertexId>> subset;
    std::optional<std::set<VertexId>> core;
    std::optional<std::vector<std::pair<VertexId, VertexId>>> edge_set;
    std::optional<Partition> partition;
    std::optional<WeightedDigraph> second;
    std::vector<std::string> warnings;
};

namespace jsondetail {

inline std::set<VertexId> id_set(const json& a, const std::string& where) {
    if (!a.is_array()) throw ParseError(where + ": must be an array of ids");
    std::set<VertexId> out;
    for (const auto& v : a) out.insert(id_from(v, where));
    return out;
}

}  // namespace jsondetail

inline CertifyParams parse_params(const std::string& text) {
    json j = jsondetail::parse_text(text);
    if (!j.is_object()) throw ParseError("params: top level must be a JSON object");
    CertifyParams p;
    if (j.contains("subset")) p.subset = jsondetail::id_set(j["subset"], "params.subset");
    if (j.contains("core")) p.core = jsondetail::id_set(j["core"], "params.core");
    if (j.contains("edge_set")) {
        const json& a = j["edge_set"];
        if (!a.is_array()) throw ParseError("params.edge_set: must be an array of [from,to] pairs");
        std::vector<std::pair<VertexId, VertexId>> es;
        for (const auto& e : a) {
            if (e.is_array() && e.size() == 2) {
                es.emplace_back(jsondetail::id_from(e[0], "params.edge_set"),
                                jsondetail::id_from(e[1], "params.edge_set"));
            } else if (e.is_object() && e.contains("from") && e.contains("to")) {
                es.emplace_back(jsondetail::id_from(e["from"], "params.edge_set"),
                                jsondetail::id_from(e["to"], "params.edge_set"));
            } else {
                throw ParseError("params.edge_set: entries must be [from,to] pairs");
            }
        }
        p.edge_set = std::move(es);
    }
    if (j.contains("partition")) {
        const json& q = j["partition"];
        if (!q.is_object() || !q.contains("a") || !q.contains("b"))
            throw ParseError("params.partition: must be {\"a\":[ids],\"b\":[ids]}");
        Partition part;
        part.a = jsondetail::id_set(q["a"], "params.partition.a");
        part.b = jsondetail::id_set(q["b"], "params.partition.b");
        p.partition = std::move(part);
    }
    if (j.contains("second")) {
        ParsedGraph pg = parse_graph(j["second"].dump());
        for (auto& w : pg.warnings) p.warnings.push_back("second: " + w);
        p.second = std::move(pg.graph);
    }
    return p;
}

}  // namespace spectra
