#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/rng.hpp"

namespace spectra {

using GeneratorSeed = std::uint64_t;

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0. Constant weights keep the graph
// balanced; non-constant weights break balance and must be requested
// explicitly.
inline WeightedDigraph cycle(int n, const std::vector<double>& weights = {},
                             const std::vector<double>& m = {}, bool allow_unbalanced = false) {
    if (n < 2) throw std::invalid_argument("cycle: need n >= 2");
    if (!weights.empty() && static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("cycle: weights list must have n entries");
    if (!m.empty() && static_cast<int>(m.size()) != n)
        throw std::invalid_argument("cycle: measure list must have n entries");
    if (!weights.empty() && !allow_unbalanced) {
        for (double w : weights)
            if (w != weights[0])
                throw std::invalid_argument(
                    "cycle: non-constant weights break balance; pass allow_unbalanced to force");
    }
    WeightedDigraph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(std::to_string(i), m.empty() ? 1.0 : m[static_cast<size_t>(i)]);
    for (int i = 0; i < n; ++i)
        g.add_edge(std::to_string(i), std::to_string((i + 1) % n),
                   weights.empty() ? 1.0 : weights[static_cast<size_t>(i)]);
    return g;
}

// Star with center "c" and leaves "1".."q", both edge directions, b = m = 1.
inline WeightedDigraph symmetric_star(int q) {
    if (q < 1) throw std::invalid_argument("symmetric_star: need q >= 1");
    WeightedDigraph g;
    g.add_vertex("c");
    for (int i = 1; i <= q; ++i) g.add_vertex(std::to_string(i));
    for (int i = 1; i <= q; ++i) {
        g.add_edge("c", std::to_string(i), 1.0);
        g.add_edge(std::to_string(i), "c", 1.0);
    }
    return g;
}

// Uniform random labeled tree (Pruefer decode), symmetrized with b = 1 in both
// directions, m = 1.
inline WeightedDigraph random_tree(int n, GeneratorSeed seed) {
    if (n < 2) throw std::invalid_argument("random_tree: need n >= 2");
    auto eng = rng::engine(seed);
    WeightedDigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    auto link = [&](int u, int v) {
        g.add_edge(std::to_string(u), std::to_string(v), 1.0);
        g.add_edge(std::to_string(v), std::to_string(u), 1.0);
    };
    if (n == 2) {
        link(0, 1);
        return g;
    }
    std::vector<int> seq(static_cast<size_t>(n - 2));
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (auto& x : seq) {
        x = rng::uniform_int(eng, 0, n - 1);
        ++degree[static_cast<size_t>(x)];
    }
    std::set<int> leaves;
    for (int i = 0; i < n; ++i)
        if (degree[static_cast<size_t>(i)] == 1) leaves.insert(i);
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        link(leaf, x);
        if (--degree[static_cast<size_t>(x)] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    link(a, b);
    return g;
}

// Superposition of directed cycles: a random Hamiltonian cycle (strong
// connectivity, exact balance) plus extra_cycles random cycles over distinct
// vertex subsequences, weights summed on repeated edges. Every circulation is
// balanced, so the sum is.
inline WeightedDigraph random_balanced(int n, int extra_cycles, GeneratorSeed seed) {
    if (n < 2) throw std::invalid_argument("random_balanced: need n >= 2");
    if (extra_cycles < 0) throw std::invalid_argument("random_balanced: extra_cycles >= 0");
    auto eng = rng::engine(seed);
    std::map<std::pair<int, int>, double> accum;
    auto add_cycle = [&](const std::vector<int>& vs, double w) {
        for (size_t i = 0; i < vs.size(); ++i)
            accum[{vs[i], vs[(i + 1) % vs.size()]}] += w;
    };
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    rng::shuffle(eng, all);
    add_cycle(all, rng::uniform_real(eng, 0.5, 2.0));
    for (int c = 0; c < extra_cycles; ++c) {
        int len = rng::uniform_int(eng, 2, n);
        std::vector<int> vs = all;
        rng::shuffle(eng, vs);
        vs.resize(static_cast<size_t>(len));
        add_cycle(vs, rng::uniform_real(eng, 0.5, 2.0));
    }
    WeightedDigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    for (const auto& [e, w] : accum) g.add_edge(std::to_string(e.first), std::to_string(e.second), w);
    return g;
}

struct FlowerPetal {
    std::set<VertexId> vertices;  // petal vertex set in the composed graph, attach included
    VertexId attach;
};

struct FlowerDecomposition {
    std::set<VertexId> core;  // V_H
    std::vector<FlowerPetal> petals;
    WeightedDigraph graph;  // composed graph G
};

struct FlowerCheck {
    bool vertex_cover = false;       // V_G = V_H union of disjoint petal interiors
    bool interiors_non_adjacent = false;
    bool single_attach = false;      // V_H intersect V_{H_i} = {x_i}
    std::string detail;

    bool all_pass() const { return vertex_cover && interiors_non_adjacent && single_attach; }
};

// Re-derives the flower conditions from the composed graph, ignoring how the
// decomposition was produced.
inline FlowerCheck verify_flower(const FlowerDecomposition& f) {
    FlowerCheck c;
    const WeightedDigraph& g = f.graph;
    std::vector<std::set<VertexId>> interiors;
    for (const auto& p : f.petals) interiors.push_back(interior_of(g, p.vertices));

    // Condition (1): core and petal interiors cover V_G, interiors pairwise disjoint.
    std::set<VertexId> covered = f.core;
    bool disjoint = true;
    for (const auto& in : interiors)
        for (const auto& v : in)
            if (!covered.insert(v).second && !f.core.count(v)) disjoint = false;
    std::set<VertexId> all(g.vertex_ids().begin(), g.vertex_ids().end());
    c.vertex_cover = disjoint && covered == all;
    if (!c.vertex_cover) c.detail += "condition (1) failed: cover/disjointness of interiors; ";

    // Condition (2): no edge joins two distinct petal interiors.
    c.interiors_non_adjacent = true;
    for (size_t i = 0; i < interiors.size(); ++i)
        for (size_t j = 0; j < interiors.size(); ++j) {
            if (i == j) continue;
            for (const auto& u : interiors[i]) {
                int ui = g.index_of(u);
                for (const auto& [w, b] : g.out_edges(ui))
                    if (interiors[j].count(g.id(w))) {
                        c.interiors_non_adjacent = false;
                        c.detail += "condition (2) failed: edge " + u + "->" + g.id(w) + "; ";
                    }
            }
        }

    // Condition (3): each petal meets the core exactly at its attach vertex.
    c.single_attach = true;
    for (const auto& p : f.petals) {
        std::set<VertexId> meet;
        for (const auto& v : p.vertices)
            if (f.core.count(v)) meet.insert(v);
        if (meet != std::set<VertexId>{p.attach}) {
            c.single_attach = false;
            c.detail += "condition (3) failed at petal attached to " + p.attach + "; ";
        }
    }
    return c;
}

// Glues each petal to the core at a single vertex: the petal's attach vertex
// is renamed to the core's attach id and takes the core's measure. Petal
// attach vertices must be distinct core vertices.
inline FlowerDecomposition flower_compose(
    const WeightedDigraph& core,
    const std::vector<std::tuple<WeightedDigraph, VertexId, VertexId>>& petals) {
    std::set<VertexId> used_attach;
    std::set<VertexId> core_ids(core.vertex_ids().begin(), core.vertex_ids().end());
    std::set<VertexId> claimed;  // non-attach petal vertices seen so far

    WeightedDigraph g;
    for (int i = 0; i < core.size(); ++i) g.add_vertex(core.id(i), core.measure(i));

    FlowerDecomposition f;
    f.core = core_ids;

    for (const auto& [petal, attach_core, attach_petal] : petals) {
        if (!core.has_vertex(attach_core))
            throw std::invalid_argument("flower_compose: attach vertex " + attach_core +
                                        " not in core");
        if (!petal.has_vertex(attach_petal))
            throw std::invalid_argument("flower_compose: attach vertex " + attach_petal +
                                        " not in petal");
        if (!used_attach.insert(attach_core).second)
            throw std::invalid_argument("flower_compose: attach vertex " + attach_core +
                                        " used by two petals");
        FlowerPetal fp;
        fp.attach = attach_core;
        for (int i = 0; i < petal.size(); ++i) {
            const VertexId& v = petal.id(i);
            if (v == attach_petal) {
                fp.vertices.insert(attach_core);
                continue;
            }
            if (core_ids.count(v))
                throw std::invalid_argument("flower_compose: petal vertex " + v +
                                            " collides with the core beyond the attach vertex");
            if (!claimed.insert(v).second)
                throw std::invalid_argument("flower_compose: petal vertex " + v +
                                            " appears in two petals");
            g.add_vertex(v, petal.measure(i));
            fp.vertices.insert(v);
        }
        auto rename = [&](const VertexId& v) { return v == attach_petal ? attach_core : v; };
        for (const auto& e : petal.edges()) g.add_edge(rename(e.from), rename(e.to), e.b);
        f.petals.push_back(std::move(fp));
    }
    for (const auto& e : core.edges()) g.add_edge(e.from, e.to, e.b);
    f.graph = std::move(g);

    FlowerCheck check = verify_flower(f);
    if (!check.all_pass())
        throw std::invalid_argument("flower_compose: composed graph violates flower conditions: " +
                                    check.detail);
    return f;
}

// Copy of g with every vertex id prefixed; measures and edges carry over.
// Keeps petal ids disjoint from a core before flower_compose.
inline WeightedDigraph with_prefix(const WeightedDigraph& g, const std::string& prefix) {
    WeightedDigraph out;
    for (int i = 0; i < g.size(); ++i) out.add_vertex(prefix + g.id(i), g.measure(i));
    for (const auto& e : g.edges()) out.add_edge(prefix + e.from, prefix + e.to, e.b);
    return out;
}

// ---- Random structures for property tests and batch certification ----

// Random connected induced-subgraph vertex set of size r (connected in the
// undirected support; g must be connected).
inline std::set<VertexId> random_connected_subset(const WeightedDigraph& g, int r,
                                                  rng::Engine& eng) {
    int n = g.size();
    if (r < 1 || r > n) throw std::invalid_argument("random_connected_subset: bad size");
    std::set<int> chosen{rng::uniform_int(eng, 0, n - 1)};
    while (static_cast<int>(chosen.size()) < r) {
        std::vector<int> frontier;
        for (int v : chosen) {
            for (const auto& [w, b] : g.out_edges(v))
                if (!chosen.count(w)) frontier.push_back(w);
            for (const auto& [w, b] : g.in_edges(v))
                if (!chosen.count(w)) frontier.push_back(w);
        }
        if (frontier.empty())
            throw std::invalid_argument("random_connected_subset: graph not connected");
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
        chosen.insert(frontier[static_cast<size_t>(
            rng::uniform_int(eng, 0, static_cast<int>(frontier.size()) - 1))]);
    }
    std::set<VertexId> ids;
    for (int v : chosen) ids.insert(g.id(v));
    return ids;
}

// Random nonempty proper-or-full vertex subset.
inline std::set<VertexId> random_vertex_subset(const WeightedDigraph& g, rng::Engine& eng) {
    std::set<VertexId> s;
    for (int i = 0; i < g.size(); ++i)
        if (rng::uniform01(eng) < 0.5) s.insert(g.id(i));
    if (s.empty()) s.insert(g.id(rng::uniform_int(eng, 0, g.size() - 1)));
    return s;
}

// Random bipartition of the edge set; either side may be empty.
inline std::pair<std::vector<std::pair<VertexId, VertexId>>,
                 std::vector<std::pair<VertexId, VertexId>>>
random_edge_bipartition(const WeightedDigraph& g, rng::Engine& eng) {
    std::vector<std::pair<VertexId, VertexId>> e1, e2;
    for (const auto& e : g.edges())
        (rng::uniform01(eng) < 0.5 ? e1 : e2).emplace_back(e.from, e.to);
    return {e1, e2};
}

}  // namespace spectra
