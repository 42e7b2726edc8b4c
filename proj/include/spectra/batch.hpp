#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/generators.hpp"
#include "spectra/theorems.hpp"

namespace spectra {

struct BatchOptions {
    int trials = 100;
    uint64_t seed = 1;
    int n = 8;  // size knob for the random inputs
    CertifyOptions certify;
};

struct BatchResult {
    TheoremId theorem;
    int trials = 0;
    int passed = 0;
    int failed = 0;
    double min_margin = 0.0;  // worst asserted margin across all trials
    std::string min_margin_desc;
    std::vector<uint64_t> failing_trials;
    std::optional<Certificate> first_failure;
};

namespace batchdetail {

// A fresh balanced graph whose size and density vary with the trial.
inline WeightedDigraph trial_graph(int n, uint64_t trial_seed, rng::Engine& eng) {
    int size = rng::uniform_int(eng, std::max(3, n - 3), n + 2);
    int extra = rng::uniform_int(eng, 1, 4);
    return random_balanced(size, extra, trial_seed);
}

// A cycle of varying length with random uniform weight and measure.
inline WeightedDigraph trial_cycle(int n, rng::Engine& eng) {
    int size = rng::uniform_int(eng, 2, std::max(4, n + 4));
    double b = rng::uniform_real(eng, 0.5, 2.0);
    double m = rng::uniform_real(eng, 0.5, 2.0);
    return cycle(size, std::vector<double>(static_cast<size_t>(size), b),
                 std::vector<double>(static_cast<size_t>(size), m));
}

// Glues petals of 2..4 vertices to a balanced core at distinct vertices.
inline std::pair<WeightedDigraph, std::set<VertexId>> trial_flower(int n, uint64_t trial_seed,
                                                                   rng::Engine& eng) {
    WeightedDigraph core = random_balanced(std::max(4, n - 2), 2, trial_seed);
    int petal_count = rng::uniform_int(eng, 1, std::min(3, core.size()));
    std::vector<VertexId> ids = core.vertex_ids();
    rng::shuffle(eng, ids);
    std::vector<std::tuple<WeightedDigraph, VertexId, VertexId>> petals;
    for (int i = 0; i < petal_count; ++i) {
        int psize = rng::uniform_int(eng, 2, 4);
        std::string prefix = "p" + std::to_string(i) + "_";
        WeightedDigraph petal = with_prefix(random_balanced(psize, 1, rng::mix(trial_seed, 100 + static_cast<uint64_t>(i))), prefix);
        VertexId attach_petal = petal.id(rng::uniform_int(eng, 0, petal.size() - 1));
        petals.emplace_back(std::move(petal), ids[static_cast<size_t>(i)], attach_petal);
    }
    FlowerDecomposition f = flower_compose(core, petals);
    return {f.graph, f.core};
}

// Two balanced blobs joined by one symmetric bridge edge; the partition sides
// are the blobs, so both interiors stay nonempty.
inline std::pair<WeightedDigraph, Partition> trial_bridged_pair(int n, uint64_t trial_seed,
                                                                rng::Engine& eng) {
    int na = rng::uniform_int(eng, 3, std::max(4, n - 2));
    int nb = rng::uniform_int(eng, 3, std::max(4, n - 2));
    WeightedDigraph a = with_prefix(random_balanced(na, 2, rng::mix(trial_seed, 1)), "a_");
    WeightedDigraph bgr = with_prefix(random_balanced(nb, 2, rng::mix(trial_seed, 2)), "b_");
    WeightedDigraph g;
    for (int i = 0; i < a.size(); ++i) g.add_vertex(a.id(i), a.measure(i));
    for (int i = 0; i < bgr.size(); ++i) g.add_vertex(bgr.id(i), bgr.measure(i));
    for (const auto& e : a.edges()) g.add_edge(e.from, e.to, e.b);
    for (const auto& e : bgr.edges()) g.add_edge(e.from, e.to, e.b);
    VertexId u = a.id(rng::uniform_int(eng, 0, a.size() - 1));
    VertexId v = bgr.id(rng::uniform_int(eng, 0, bgr.size() - 1));
    double w = rng::uniform_real(eng, 0.5, 2.0);
    g.add_edge(u, v, w);
    g.add_edge(v, u, w);
    Partition p;
    for (int i = 0; i < a.size(); ++i) p.a.insert(a.id(i));
    for (int i = 0; i < bgr.size(); ++i) p.b.insert(bgr.id(i));
    return {g, p};
}

// A uniform cycle split into two contiguous arcs of at least 3 vertices.
inline std::pair<WeightedDigraph, Partition> trial_cycle_partition(int n, rng::Engine& eng) {
    int size = rng::uniform_int(eng, 6, std::max(8, n + 4));
    double b = rng::uniform_real(eng, 0.5, 2.0);
    WeightedDigraph g = cycle(size, std::vector<double>(static_cast<size_t>(size), b));
    int cut = rng::uniform_int(eng, 3, size - 3);
    int start = rng::uniform_int(eng, 0, size - 1);
    Partition p;
    for (int i = 0; i < size; ++i) {
        VertexId v = std::to_string((start + i) % size);
        (i < cut ? p.a : p.b).insert(v);
    }
    return {g, p};
}

// The input graph plus superposed random cycles: entrywise heavier, still
// balanced, same vertices and measures.
inline WeightedDigraph heavier_by_circulation(const WeightedDigraph& g, rng::Engine& eng) {
    std::map<std::pair<VertexId, VertexId>, double> acc;
    for (const auto& e : g.edges()) acc[{e.from, e.to}] = e.b;
    int n = g.size();
    int extra = rng::uniform_int(eng, 1, 3);
    std::vector<VertexId> ids = g.vertex_ids();
    for (int c = 0; c < extra; ++c) {
        int len = rng::uniform_int(eng, 2, n);
        rng::shuffle(eng, ids);
        double w = rng::uniform_real(eng, 0.2, 1.5);
        for (int i = 0; i < len; ++i)
            acc[{ids[static_cast<size_t>(i)], ids[static_cast<size_t>((i + 1) % len)]}] += w;
    }
    WeightedDigraph out;
    for (int i = 0; i < n; ++i) out.add_vertex(g.id(i), g.measure(i));
    for (const auto& [e, w] : acc) out.add_edge(e.first, e.second, w);
    return out;
}

inline TheoremInput make_input(TheoremId t, int n, uint64_t trial_seed) {
    auto eng = rng::engine(trial_seed);
    TheoremInput in;
    switch (t) {
        case TheoremId::green_identity:
        case TheoremId::positivity_s:
        case TheoremId::spectrum_basic:
        case TheoremId::realpart_lemma:
            in.g = trial_graph(n, trial_seed, eng);
            break;
        case TheoremId::cycle_spectrum:
        case TheoremId::cycle_corollary:
            in.g = trial_cycle(n, eng);
            break;
        case TheoremId::subgraph_interlace:
        case TheoremId::dirichlet_realpart:
        case TheoremId::dirichlet_interlace:
        case TheoremId::dirichlet_max_combine: {
            in.g = trial_graph(n, trial_seed, eng);
            int r = rng::uniform_int(eng, 1, in.g.size() - 1);
            in.subset = random_connected_subset(in.g, r, eng);
            break;
        }
        case TheoremId::flower_monotone: {
            auto [g, core] = trial_flower(n, trial_seed, eng);
            in.g = std::move(g);
            in.subset = std::move(core);
            break;
        }
        case TheoremId::tree_star_bound: {
            int size = rng::uniform_int(eng, std::max(3, n - 3), n + 4);
            in.g = random_tree(size, trial_seed);
            break;
        }
        case TheoremId::single_edge_attach: {
            WeightedDigraph core = random_balanced(std::max(4, n - 2), 2, rng::mix(trial_seed, 1));
            WeightedDigraph attach =
                with_prefix(random_balanced(rng::uniform_int(eng, 2, 5), 1, rng::mix(trial_seed, 2)), "w_");
            WeightedDigraph w;
            for (int i = 0; i < core.size(); ++i) w.add_vertex(core.id(i), core.measure(i));
            for (int i = 0; i < attach.size(); ++i) w.add_vertex(attach.id(i), attach.measure(i));
            for (const auto& e : core.edges()) w.add_edge(e.from, e.to, e.b);
            for (const auto& e : attach.edges()) w.add_edge(e.from, e.to, e.b);
            VertexId u = core.id(rng::uniform_int(eng, 0, core.size() - 1));
            VertexId v = attach.id(rng::uniform_int(eng, 0, attach.size() - 1));
            double bw = rng::uniform_real(eng, 0.5, 2.0);
            w.add_edge(u, v, bw);
            w.add_edge(v, u, bw);
            in.g = std::move(w);
            std::set<VertexId> cs;
            for (int i = 0; i < core.size(); ++i) cs.insert(core.id(i));
            in.subset = std::move(cs);
            break;
        }
        case TheoremId::edge_weyl:
        case TheoremId::edge_sandwich: {
            in.g = trial_graph(n, trial_seed, eng);
            auto [e1, e2] = random_edge_bipartition(in.g, eng);
            in.edge_set = std::move(e1);
            break;
        }
        case TheoremId::edge_monotone: {
            in.g = trial_graph(n, trial_seed, eng);
            in.second = heavier_by_circulation(in.g, eng);
            break;
        }
        case TheoremId::cycle_subgraph_corollary: {
            int size = rng::uniform_int(eng, 3, std::max(6, n + 4));
            double bw = rng::uniform_real(eng, 0.5, 2.0);
            in.g = cycle(size, std::vector<double>(static_cast<size_t>(size), bw));
            int r = rng::uniform_int(eng, 1, size - 1);
            int start = rng::uniform_int(eng, 0, size - 1);
            std::set<VertexId> arc;
            for (int i = 0; i < r; ++i) arc.insert(std::to_string((start + i) % size));
            in.subset = std::move(arc);
            break;
        }
        case TheoremId::partition_bound:
        case TheoremId::partition_realpart: {
            if (trial_seed % 2 == 0) {
                auto [g, p] = trial_bridged_pair(n, trial_seed, eng);
                in.g = std::move(g);
                in.partition = std::move(p);
            } else {
                auto [g, p] = trial_cycle_partition(n, eng);
                in.g = std::move(g);
                in.partition = std::move(p);
            }
            break;
        }
    }
    return in;
}

}  // namespace batchdetail

// Runs `trials` randomized instances of one theorem's certificate. Inputs are
// derived deterministically from (seed, trial index).
inline BatchResult batch_certify(TheoremId t, const BatchOptions& opts) {
    if (opts.trials < 1) throw std::invalid_argument("batch_certify: trials must be positive");
    BatchResult res;
    res.theorem = t;
    res.trials = opts.trials;
    bool first = true;
    for (int trial = 0; trial < opts.trials; ++trial) {
        uint64_t trial_seed = rng::mix(opts.seed, static_cast<uint64_t>(trial));
        CertifyOptions copts = opts.certify;
        copts.probe_seed = rng::mix(trial_seed, 0xabcdef);
        TheoremInput in = batchdetail::make_input(t, opts.n, trial_seed);
        Certificate c = certify(t, in, copts);
        if (c.pass) ++res.passed;
        else {
            ++res.failed;
            res.failing_trials.push_back(static_cast<uint64_t>(trial));
            if (!res.first_failure) res.first_failure = c;
        }
        for (const auto& ch : c.checks) {
            if (!ch.asserted) continue;
            if (first || ch.margin < res.min_margin) {
                res.min_margin = ch.margin;
                res.min_margin_desc = "trial " + std::to_string(trial) + ": " + ch.desc;
                first = false;
            }
        }
    }
    return res;
}

}  // namespace spectra
