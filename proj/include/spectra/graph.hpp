#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace spectra {

using VertexId = std::string;

struct EdgeRef {
    VertexId from;
    VertexId to;
    double b;
};

// Finite weighted digraph (V, b, m): positive vertex measure m, positive edge
// weights b, no self-loops. Vertex order is insertion order and is the
// canonical order for every matrix built from the graph. Parallel edges are
// merged by summing b; the merge is recorded in merged_parallel_edges().
// Treated as immutable once populated: all operations take const references.
class WeightedDigraph {
public:
    int add_vertex(const VertexId& id, double m = 1.0) {
        if (index_.count(id)) throw std::invalid_argument("duplicate vertex id: " + id);
        if (!(m > 0.0) || !std::isfinite(m))
            throw std::invalid_argument("vertex " + id + ": measure must be positive and finite");
        int idx = static_cast<int>(ids_.size());
        index_.emplace(id, idx);
        ids_.push_back(id);
        measure_.push_back(m);
        out_.emplace_back();
        in_.emplace_back();
        return idx;
    }

    void add_edge(const VertexId& from, const VertexId& to, double b = 1.0) {
        int i = index_of(from);
        int j = index_of(to);
        if (i == j) throw std::invalid_argument("self-loop rejected at vertex " + from);
        if (!(b > 0.0) || !std::isfinite(b))
            throw std::invalid_argument("edge (" + from + "," + to +
                                        "): weight must be positive and finite");
        auto [it, inserted] = out_[static_cast<size_t>(i)].emplace(j, b);
        if (!inserted) {
            it->second += b;
            merged_parallel_edges_ = true;
        } else {
            ++edge_count_;
        }
        in_[static_cast<size_t>(j)][i] = it->second;
    }

    int size() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return edge_count_; }
    bool merged_parallel_edges() const { return merged_parallel_edges_; }

    const VertexId& id(int i) const { return ids_[static_cast<size_t>(i)]; }
    const std::vector<VertexId>& vertex_ids() const { return ids_; }

    double measure(int i) const { return measure_[static_cast<size_t>(i)]; }
    double measure_of(const VertexId& v) const { return measure_[static_cast<size_t>(index_of(v))]; }
    const std::vector<double>& measures() const { return measure_; }

    bool has_vertex(const VertexId& v) const { return index_.count(v) != 0; }

    int index_of(const VertexId& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw std::invalid_argument("unknown vertex id: " + v);
        return it->second;
    }

    bool has_edge(int i, int j) const { return out_[static_cast<size_t>(i)].count(j) != 0; }
    bool has_edge(const VertexId& u, const VertexId& v) const {
        return has_vertex(u) && has_vertex(v) && has_edge(index_of(u), index_of(v));
    }

    // b(i,j), 0 when absent.
    double weight(int i, int j) const {
        const auto& row = out_[static_cast<size_t>(i)];
        auto it = row.find(j);
        return it == row.end() ? 0.0 : it->second;
    }
    double weight(const VertexId& u, const VertexId& v) const {
        return weight(index_of(u), index_of(v));
    }

    // Out-edges of i keyed by target index, ascending. Deterministic.
    const std::map<int, double>& out_edges(int i) const { return out_[static_cast<size_t>(i)]; }
    const std::map<int, double>& in_edges(int i) const { return in_[static_cast<size_t>(i)]; }

    // All edges in canonical order (from-index, then to-index).
    std::vector<EdgeRef> edges() const {
        std::vector<EdgeRef> es;
        es.reserve(static_cast<size_t>(edge_count_));
        for (int i = 0; i < size(); ++i)
            for (const auto& [j, b] : out_edges(i)) es.push_back({id(i), id(j), b});
        return es;
    }

    double beta_plus(int i) const {
        double s = 0.0;
        for (const auto& [j, b] : out_edges(i)) s += b;
        return s;
    }
    double beta_minus(int i) const {
        double s = 0.0;
        for (const auto& [j, b] : in_edges(i)) s += b;
        return s;
    }

    // Same graph with vertices reordered lexicographically by id.
    WeightedDigraph sorted_by_id() const {
        std::vector<VertexId> order = ids_;
        std::sort(order.begin(), order.end());
        WeightedDigraph g;
        for (const auto& v : order) g.add_vertex(v, measure_of(v));
        for (const auto& e : edges()) g.add_edge(e.from, e.to, e.b);
        return g;
    }

    bool operator==(const WeightedDigraph& o) const {
        return ids_ == o.ids_ && measure_ == o.measure_ && out_ == o.out_;
    }

private:
    std::vector<VertexId> ids_;
    std::vector<double> measure_;
    std::unordered_map<VertexId, int> index_;
    std::vector<std::map<int, double>> out_;
    std::vector<std::map<int, double>> in_;
    int edge_count_ = 0;
    bool merged_parallel_edges_ = false;
};

struct DegreeProfile {
    std::set<VertexId> out_neighbors;  // V_x+
    std::set<VertexId> in_neighbors;   // V_x-
    std::set<VertexId> all_neighbors;  // V_x
    double beta_plus = 0.0;
    double beta_minus = 0.0;
    double beta_total = 0.0;  // beta_plus + beta_minus
    int valency = 0;          // |all_neighbors|
};

inline DegreeProfile degree_profile(const WeightedDigraph& g, const VertexId& x) {
    int i = g.index_of(x);
    DegreeProfile p;
    for (const auto& [j, b] : g.out_edges(i)) {
        p.out_neighbors.insert(g.id(j));
        p.beta_plus += b;
    }
    for (const auto& [j, b] : g.in_edges(i)) {
        p.in_neighbors.insert(g.id(j));
        p.beta_minus += b;
    }
    p.all_neighbors = p.out_neighbors;
    p.all_neighbors.insert(p.in_neighbors.begin(), p.in_neighbors.end());
    p.beta_total = p.beta_plus + p.beta_minus;
    p.valency = static_cast<int>(p.all_neighbors.size());
    return p;
}

struct ValidationReport {
    bool has_loops = false;        // impossible by construction; reported for completeness
    bool weights_positive = true;  // likewise
    bool hypothesis_cnx = false;   // every vertex has an out- and an in-neighbor
    bool connected = false;        // undirected support is connected
    bool strongly_connected = false;
    bool beta_balanced = false;  // beta_plus(x) == beta_minus(x) for all x, within tolerance
    std::map<VertexId, double> beta_defect;  // beta_plus(x) - beta_minus(x)
    VertexId worst_defect_vertex;
    double worst_defect = 0.0;
    double tolerance_used = 0.0;

    bool all_pass() const {
        return !has_loops && weights_positive && hypothesis_cnx && connected && beta_balanced;
    }
};

namespace detail {

inline bool undirected_connected(const WeightedDigraph& g) {
    int n = g.size();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        auto visit = [&](int w) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        };
        for (const auto& [w, b] : g.out_edges(v)) visit(w);
        for (const auto& [w, b] : g.in_edges(v)) visit(w);
    }
    return count == n;
}

inline bool strongly_connected(const WeightedDigraph& g) {
    int n = g.size();
    if (n <= 1) return true;
    // Reachability from vertex 0 forward and backward covers the whole graph
    // iff the graph is strongly connected.
    auto sweep = [&](bool forward) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            const auto& row = forward ? g.out_edges(v) : g.in_edges(v);
            for (const auto& [w, b] : row) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n;
    };
    return sweep(true) && sweep(false);
}

}  // namespace detail

// Relative balance tolerance: defects are compared against
// tol * max(1, max_x beta_plus(x)).
inline ValidationReport validate(const WeightedDigraph& g, double tol = 1e-9) {
    ValidationReport r;
    r.tolerance_used = tol;
    r.hypothesis_cnx = true;
    double beta_scale = 1.0;
    for (int i = 0; i < g.size(); ++i)
        beta_scale = std::max(beta_scale, g.beta_plus(i));
    r.beta_balanced = true;
    for (int i = 0; i < g.size(); ++i) {
        if (g.out_edges(i).empty() || g.in_edges(i).empty()) r.hypothesis_cnx = false;
        double defect = g.beta_plus(i) - g.beta_minus(i);
        r.beta_defect[g.id(i)] = defect;
        if (std::abs(defect) > std::abs(r.worst_defect)) {
            r.worst_defect = defect;
            r.worst_defect_vertex = g.id(i);
        }
        if (std::abs(defect) > tol * beta_scale) r.beta_balanced = false;
    }
    r.connected = detail::undirected_connected(g);
    r.strongly_connected = detail::strongly_connected(g);
    return r;
}

// Subgraph induced by the vertex set S: vertices in g's order, all edges of g
// with both endpoints in S, measures and weights inherited.
inline WeightedDigraph induced_subgraph(const WeightedDigraph& g, const std::set<VertexId>& s) {
    WeightedDigraph h;
    for (const auto& v : s)
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_subgraph: unknown vertex " + v);
    for (int i = 0; i < g.size(); ++i)
        if (s.count(g.id(i))) h.add_vertex(g.id(i), g.measure(i));
    for (const auto& e : g.edges())
        if (s.count(e.from) && s.count(e.to)) h.add_edge(e.from, e.to, e.b);
    return h;
}

// Partial graph: all vertices of g, edge set restricted to the given edges.
// Every listed edge must exist in g; weights and measures are inherited.
inline WeightedDigraph partial_graph(const WeightedDigraph& g,
                                     const std::vector<std::pair<VertexId, VertexId>>& edges) {
    WeightedDigraph h;
    for (int i = 0; i < g.size(); ++i) h.add_vertex(g.id(i), g.measure(i));
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [u, v] : edges) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("partial_graph: edge (" + u + "," + v + ") not in graph");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("partial_graph: duplicate edge (" + u + "," + v + ")");
        h.add_edge(u, v, g.weight(u, v));
    }
    return h;
}

// Part of g: chosen vertices plus chosen edges among them (need not be all
// induced edges). Edge endpoints must lie in the chosen vertex set.
inline WeightedDigraph part_of_graph(const WeightedDigraph& g, const std::set<VertexId>& vs,
                                     const std::vector<std::pair<VertexId, VertexId>>& edges) {
    WeightedDigraph h;
    for (const auto& v : vs)
        if (!g.has_vertex(v)) throw std::invalid_argument("part_of_graph: unknown vertex " + v);
    for (int i = 0; i < g.size(); ++i)
        if (vs.count(g.id(i))) h.add_vertex(g.id(i), g.measure(i));
    for (const auto& [u, v] : edges) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("part_of_graph: edge (" + u + "," + v + ") not in graph");
        if (!vs.count(u) || !vs.count(v))
            throw std::invalid_argument("part_of_graph: edge (" + u + "," + v +
                                        ") leaves the vertex set");
        h.add_edge(u, v, g.weight(u, v));
    }
    return h;
}

struct BoundarySets {
    std::set<VertexId> interior;         // vertices of Omega with all neighbors in Omega
    std::set<VertexId> vertex_boundary;  // vertices outside Omega adjacent to Omega
    std::vector<std::pair<VertexId, VertexId>> edge_boundary;  // edges crossing Omega, g order
};

inline BoundarySets boundary_sets(const WeightedDigraph& g, const std::set<VertexId>& omega) {
    for (const auto& v : omega)
        if (!g.has_vertex(v)) throw std::invalid_argument("boundary_sets: unknown vertex " + v);
    BoundarySets b;
    auto inside = [&](int i) { return omega.count(g.id(i)) != 0; };
    for (int i = 0; i < g.size(); ++i) {
        bool in_i = inside(i);
        if (in_i) {
            bool all_in = true;
            for (const auto& [j, w] : g.out_edges(i)) all_in = all_in && inside(j);
            for (const auto& [j, w] : g.in_edges(i)) all_in = all_in && inside(j);
            if (all_in) b.interior.insert(g.id(i));
        }
        for (const auto& [j, w] : g.out_edges(i)) {
            bool in_j = inside(j);
            if (in_i != in_j) {
                b.edge_boundary.emplace_back(g.id(i), g.id(j));
                if (!in_i) b.vertex_boundary.insert(g.id(i));
                if (!in_j) b.vertex_boundary.insert(g.id(j));
            }
        }
    }
    return b;
}

// Interior of a vertex set: members whose neighbors (either direction) all
// lie in the set.
inline std::set<VertexId> interior_of(const WeightedDigraph& g, const std::set<VertexId>& s) {
    std::set<VertexId> res;
    for (const auto& v : s) {
        int i = g.index_of(v);
        bool all_in = true;
        for (const auto& [j, w] : g.out_edges(i)) all_in = all_in && s.count(g.id(j));
        for (const auto& [j, w] : g.in_edges(i)) all_in = all_in && s.count(g.id(j));
        if (all_in) res.insert(v);
    }
    return res;
}

}  // namespace spectra
