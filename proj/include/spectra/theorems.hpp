#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "spectra/eigensolve.hpp"
#include "spectra/generators.hpp"
#include "spectra/graph.hpp"
#include "spectra/operators.hpp"
#include "spectra/rng.hpp"

namespace spectra {

enum class TheoremId {
    green_identity,
    positivity_s,
    spectrum_basic,
    realpart_lemma,
    cycle_spectrum,
    cycle_corollary,
    subgraph_interlace,
    flower_monotone,
    tree_star_bound,
    single_edge_attach,
    edge_weyl,
    edge_sandwich,
    edge_monotone,
    dirichlet_realpart,
    dirichlet_interlace,
    dirichlet_max_combine,
    cycle_subgraph_corollary,
    partition_bound,
    partition_realpart,
};

inline const std::vector<std::pair<TheoremId, std::string>>& theorem_names() {
    static const std::vector<std::pair<TheoremId, std::string>> names = {
        {TheoremId::green_identity, "GREEN_IDENTITY"},
        {TheoremId::positivity_s, "POSITIVITY_S"},
        {TheoremId::spectrum_basic, "SPECTRUM_BASIC"},
        {TheoremId::realpart_lemma, "REALPART_LEMMA"},
        {TheoremId::cycle_spectrum, "CYCLE_SPECTRUM"},
        {TheoremId::cycle_corollary, "CYCLE_COROLLARY"},
        {TheoremId::subgraph_interlace, "SUBGRAPH_INTERLACE"},
        {TheoremId::flower_monotone, "FLOWER_MONOTONE"},
        {TheoremId::tree_star_bound, "TREE_STAR_BOUND"},
        {TheoremId::single_edge_attach, "SINGLE_EDGE_ATTACH"},
        {TheoremId::edge_weyl, "EDGE_WEYL"},
        {TheoremId::edge_sandwich, "EDGE_SANDWICH"},
        {TheoremId::edge_monotone, "EDGE_MONOTONE"},
        {TheoremId::dirichlet_realpart, "DIRICHLET_REALPART"},
        {TheoremId::dirichlet_interlace, "DIRICHLET_INTERLACE"},
        {TheoremId::dirichlet_max_combine, "DIRICHLET_MAX_COMBINE"},
        {TheoremId::cycle_subgraph_corollary, "CYCLE_SUBGRAPH_COROLLARY"},
        {TheoremId::partition_bound, "PARTITION_BOUND"},
        {TheoremId::partition_realpart, "PARTITION_REALPART"},
    };
    return names;
}

inline std::string to_string(TheoremId t) {
    for (const auto& [id, name] : theorem_names())
        if (id == t) return name;
    throw std::logic_error("to_string: unknown theorem id");
}

// Accepts the canonical id in any case, with '-' and '_' interchangeable.
inline TheoremId theorem_from_string(const std::string& name) {
    auto canon = [](const std::string& s) {
        std::string out;
        for (char c : s) out.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        return out;
    };
    std::string want = canon(name);
    for (const auto& [id, n] : theorem_names())
        if (canon(n) == want) return id;
    throw std::invalid_argument("unknown theorem name '" + name + "'");
}

inline std::vector<TheoremId> all_theorems() {
    std::vector<TheoremId> v;
    for (const auto& [id, name] : theorem_names()) v.push_back(id);
    return v;
}

// One verified relation. For an inequality lhs <= rhs the margin is
// rhs - lhs; identities store the observed distance as lhs with rhs = 0. A
// check holds when margin >= -tol. Non-asserted checks record margins that
// the certified statements do not promise (index diagnostics, per-k tables).
struct CertCheck {
    std::string desc;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double tol = 0.0;
    bool asserted = true;

    bool holds() const { return margin >= -tol; }
};

struct Certificate {
    TheoremId theorem;
    std::string input_digest;
    std::vector<CertCheck> checks;
    bool pass = true;
    double tolerance = 0.0;  // base relative inequality tolerance used
    std::vector<std::string> notes;
};

struct CertifyOptions {
    double tol = 1e-8;           // relative; scaled by max(1, operator norm)
    double identity_tol = 1e-10; // relative; scaled the same way
    Mode mode = Mode::raw;
    uint64_t probe_seed = 1;     // seeds the random probe functions
    int probe_trials = 8;
};

// Vertex bipartition V = A ⊔ B examined through the interior sets: interior(A)
// and interior(B) are never joined by an edge, which is what the splitting
// bounds rely on.
struct Partition {
    std::set<VertexId> a;
    std::set<VertexId> b;
};

struct PartitionReport {
    bool disjoint_cover = false;   // V = A ⊔ B, both nonempty
    bool edges_split = false;      // E = E_A ⊔ E_B ⊔ E_crossing
    bool boundaries_match = false; // edge boundary of A = edge boundary of B = crossing edges
    int interior_a = 0;
    int interior_b = 0;
    bool interiors_nonempty = false;
    std::string detail;

    bool all_pass() const {
        return disjoint_cover && edges_split && boundaries_match && interiors_nonempty;
    }
};

inline PartitionReport validate_partition(const WeightedDigraph& g, const Partition& p) {
    PartitionReport r;
    std::set<VertexId> all(g.vertex_ids().begin(), g.vertex_ids().end());
    std::set<VertexId> both;
    std::set_intersection(p.a.begin(), p.a.end(), p.b.begin(), p.b.end(),
                          std::inserter(both, both.begin()));
    std::set<VertexId> uni;
    std::set_union(p.a.begin(), p.a.end(), p.b.begin(), p.b.end(),
                   std::inserter(uni, uni.begin()));
    r.disjoint_cover = both.empty() && uni == all && !p.a.empty() && !p.b.empty();
    if (!both.empty()) r.detail += "vertex " + *both.begin() + " appears on both sides; ";
    if (p.a.empty()) r.detail += "side A is empty; ";
    if (p.b.empty()) r.detail += "side B is empty; ";
    for (const auto& v : all)
        if (!uni.count(v)) {
            r.detail += "vertex " + v + " is on neither side; ";
            break;
        }
    for (const auto& v : uni)
        if (!all.count(v)) {
            r.detail += "vertex " + v + " is not in the graph; ";
            break;
        }

    int in_a = 0, in_b = 0, crossing = 0;
    std::set<std::pair<VertexId, VertexId>> boundary_a, boundary_b, cross_set;
    for (const auto& e : g.edges()) {
        bool fa = p.a.count(e.from) > 0, ta = p.a.count(e.to) > 0;
        if (fa && ta) ++in_a;
        else if (!fa && !ta) ++in_b;
        else {
            ++crossing;
            cross_set.insert({e.from, e.to});
            boundary_a.insert({e.from, e.to});
            boundary_b.insert({e.from, e.to});
        }
    }
    r.edges_split = in_a + in_b + crossing == g.edge_count();
    r.boundaries_match = boundary_a == cross_set && boundary_b == cross_set;
    std::set<VertexId> a_known, b_known;
    for (const auto& v : p.a)
        if (all.count(v)) a_known.insert(v);
    for (const auto& v : p.b)
        if (all.count(v)) b_known.insert(v);
    r.interior_a = static_cast<int>(interior_of(g, a_known).size());
    r.interior_b = static_cast<int>(interior_of(g, b_known).size());
    r.interiors_nonempty = r.interior_a > 0 && r.interior_b > 0;
    if (!r.interiors_nonempty) r.detail += "both interiors must be nonempty; ";
    return r;
}

// ---- canonical input digest ----

namespace certdetail {

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

inline void canonical_graph(std::ostringstream& os, const WeightedDigraph& g) {
    os << std::hexfloat;
    os << "V:";
    for (int i = 0; i < g.size(); ++i) os << g.id(i) << "=" << g.measure(i) << ";";
    os << "E:";
    for (const auto& e : g.edges()) os << e.from << ">" << e.to << "=" << e.b << ";";
}

inline double lambda(const std::vector<double>& sorted, int k) {
    if (k < 1 || k > static_cast<int>(sorted.size()))
        throw std::logic_error("eigenvalue index out of range: " + std::to_string(k));
    return sorted[static_cast<size_t>(k - 1)];
}

inline std::vector<double> sorted_real_parts(const ComplexSpectrum& s) {
    std::vector<double> r = real_parts(s);
    std::sort(r.begin(), r.end());
    return r;
}

struct Builder {
    Certificate cert;
    double ineq_tol_abs = 0.0;
    double ident_tol_abs = 0.0;

    Builder(TheoremId t, const CertifyOptions& o, double scale) {
        cert.theorem = t;
        cert.tolerance = o.tol;
        double s = std::max(1.0, scale);
        ineq_tol_abs = o.tol * s;
        ident_tol_abs = o.identity_tol * s;
    }

    void digest_from(const std::function<void(std::ostringstream&)>& fill) {
        std::ostringstream os;
        fill(os);
        cert.input_digest = hex64(fnv1a64(os.str()));
    }

    // lhs <= rhs
    void le(const std::string& desc, double lhs, double rhs, bool asserted = true) {
        CertCheck c;
        c.desc = desc;
        c.lhs = lhs;
        c.rhs = rhs;
        c.margin = rhs - lhs;
        c.tol = ineq_tol_abs;
        c.asserted = asserted;
        if (asserted && !c.holds()) cert.pass = false;
        cert.checks.push_back(std::move(c));
    }

    void ge(const std::string& desc, double lhs, double rhs, bool asserted = true) {
        le(desc, rhs, lhs, asserted);
        cert.checks.back().desc = desc;
        cert.checks.back().lhs = lhs;
        cert.checks.back().rhs = rhs;
    }

    // |distance| <= identity tolerance
    void identity(const std::string& desc, double distance, bool asserted = true) {
        CertCheck c;
        c.desc = desc;
        c.lhs = distance;
        c.rhs = 0.0;
        c.margin = -std::abs(distance);
        c.tol = ident_tol_abs;
        c.asserted = asserted;
        if (asserted && !c.holds()) cert.pass = false;
        cert.checks.push_back(std::move(c));
    }

    void flag(const std::string& desc, bool ok, bool asserted = true) {
        CertCheck c;
        c.desc = desc;
        c.lhs = ok ? 1.0 : 0.0;
        c.rhs = 1.0;
        c.margin = ok ? 0.0 : -1.0;
        c.tol = 0.0;
        c.asserted = asserted;
        if (asserted && !ok) cert.pass = false;
        cert.checks.push_back(std::move(c));
    }

    void note(const std::string& s) { cert.notes.push_back(s); }
};

inline void require_valid(const WeightedDigraph& g, const char* who) {
    ValidationReport r = validate(g);
    if (!r.all_pass()) {
        std::string msg = std::string(who) + ": input graph fails validation:";
        if (r.has_loops) msg += " has loops;";
        if (!r.weights_positive) msg += " nonpositive weights;";
        if (!r.hypothesis_cnx) msg += " a vertex lacks an out- or in-neighbor;";
        if (!r.connected) msg += " not connected;";
        if (!r.beta_balanced)
            msg += " flow balance fails at " + r.worst_defect_vertex + " (defect " +
                   std::to_string(r.worst_defect) + ");";
        throw std::invalid_argument(msg);
    }
}

// Detects a uniform directed cycle: every vertex has exactly one out- and one
// in-edge, all weights equal, all measures equal, one orbit.
struct CycleShape {
    bool is_cycle = false;
    double b = 0.0;
    double m = 0.0;
    std::vector<int> order;  // vertex indices along the cycle
};

inline CycleShape detect_uniform_cycle(const WeightedDigraph& g) {
    CycleShape s;
    int n = g.size();
    if (n < 2) return s;
    double b0 = 0.0, m0 = g.measure(0);
    for (int i = 0; i < n; ++i) {
        if (g.out_edges(i).size() != 1 || g.in_edges(i).size() != 1) return s;
        double bi = g.out_edges(i).begin()->second;
        if (i == 0) b0 = bi;
        if (std::abs(bi - b0) > 1e-12 * std::max(1.0, std::abs(b0))) return s;
        if (std::abs(g.measure(i) - m0) > 1e-12 * std::max(1.0, std::abs(m0))) return s;
    }
    std::vector<int> order{0};
    int cur = 0;
    for (int step = 1; step < n; ++step) {
        cur = g.out_edges(cur).begin()->first;
        if (cur == 0) return s;  // short orbit: not a single cycle
        order.push_back(cur);
    }
    if (g.out_edges(cur).begin()->first != 0) return s;
    s.is_cycle = true;
    s.b = b0;
    s.m = m0;
    s.order = std::move(order);
    return s;
}

// Derives the flower structure of g around a core vertex set: each connected
// component of the complement must attach to the core through exactly one
// core vertex, and distinct components through distinct ones.
inline FlowerDecomposition derive_flower(const WeightedDigraph& g,
                                         const std::set<VertexId>& core) {
    for (const auto& v : core)
        if (!g.has_vertex(v))
            throw std::invalid_argument("derive_flower: unknown core vertex " + v);
    if (core.empty()) throw std::invalid_argument("derive_flower: empty core");

    FlowerDecomposition f;
    f.core = core;
    std::set<VertexId> rest;
    for (int i = 0; i < g.size(); ++i)
        if (!core.count(g.id(i))) rest.insert(g.id(i));

    std::set<VertexId> seen;
    for (const auto& start : rest) {
        if (seen.count(start)) continue;
        // component of `rest` containing start, in the undirected support
        std::set<VertexId> comp{start};
        std::vector<VertexId> stack{start};
        std::set<VertexId> attaches;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            int vi = g.index_of(v);
            auto visit = [&](int wi) {
                VertexId w = g.id(wi);
                if (core.count(w)) {
                    attaches.insert(w);
                } else if (!comp.count(w)) {
                    comp.insert(w);
                    stack.push_back(w);
                }
            };
            for (const auto& [w, b] : g.out_edges(vi)) visit(w);
            for (const auto& [w, b] : g.in_edges(vi)) visit(w);
        }
        if (attaches.size() != 1)
            throw std::invalid_argument(
                "derive_flower: a component off the core attaches through " +
                std::to_string(attaches.size()) + " core vertices (need exactly 1)");
        FlowerPetal p;
        p.attach = *attaches.begin();
        p.vertices = comp;
        p.vertices.insert(p.attach);
        f.petals.push_back(std::move(p));
        seen.insert(comp.begin(), comp.end());
    }
    f.graph = g;
    FlowerCheck check = verify_flower(f);
    if (!check.all_pass())
        throw std::invalid_argument("derive_flower: not a flower around this core: " +
                                    check.detail);
    return f;
}

}  // namespace certdetail

// ---- individual certificates ----

// (Delta f, h)_m + (Delta* f, h)_m equals the sum of b(x,y) df conj(dh) over
// directed edges, probed at random complex functions; plus the matching real
// quadratic form identity for S.
inline Certificate certify_green_identity(const WeightedDigraph& g, const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "GREEN_IDENTITY");
    OperatorMatrix d = laplacian(g, opts.mode);
    OperatorMatrix ds = adjoint_laplacian(g, opts.mode);
    OperatorMatrix s = special_laplacian(g, opts.mode);

    Builder b(TheoremId::green_identity, opts, s.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) { canonical_graph(os, g); });
    b.note(opts.mode == Mode::raw ? "mode: raw" : "mode: normalized");

    auto eng = rng::engine(opts.probe_seed);
    for (int t = 0; t < opts.probe_trials; ++t) {
        VertexFunction f(static_cast<size_t>(g.size())), h(static_cast<size_t>(g.size()));
        for (auto& z : f) z = {rng::uniform_real(eng, -1.0, 1.0), rng::uniform_real(eng, -1.0, 1.0)};
        for (auto& z : h) z = {rng::uniform_real(eng, -1.0, 1.0), rng::uniform_real(eng, -1.0, 1.0)};
        std::complex<double> lhs =
            m_inner(d.measure, d.entries * f, h) + m_inner(ds.measure, ds.entries * f, h);
        std::complex<double> rhs = green_form(g, f, h);
        double scale = std::max(1.0, std::abs(rhs));
        b.identity("probe " + std::to_string(t + 1) +
                       ": (Df,h)_m + (D*f,h)_m matches the edge form",
                   std::abs(lhs - rhs) / scale);
        std::complex<double> sq = m_inner(s.measure, s.entries * f, f);
        std::complex<double> gq = green_form(g, f, f);
        b.identity("probe " + std::to_string(t + 1) + ": (Sf,f)_m matches the edge energy",
                   std::abs(sq - gq) / std::max(1.0, std::abs(gq)));
        b.le("probe " + std::to_string(t + 1) + ": edge energy is nonnegative", 0.0, gq.real());
        b.identity("probe " + std::to_string(t + 1) + ": edge energy is real", std::abs(gq.imag()));
    }
    return b.cert;
}

// S is m-symmetric and positive semi-definite.
inline Certificate certify_positivity(const WeightedDigraph& g, const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "POSITIVITY_S");
    OperatorMatrix s = special_laplacian(g, opts.mode);
    double norm = s.entries.inf_norm();

    Builder b(TheoremId::positivity_s, opts, norm);
    b.digest_from([&](std::ostringstream& os) { canonical_graph(os, g); });
    b.note(opts.mode == Mode::raw ? "mode: raw" : "mode: normalized");

    b.identity("S is m-symmetric", m_asymmetry(s) / std::max(1.0, norm));
    Spectrum sp = eig_m_symmetric(s);
    b.le("eigensolver residual within bound", sp.residual, 1e-9);
    b.le("smallest eigenvalue of S is nonnegative", 0.0, sp.eigenvalues.front());

    auto eng = rng::engine(opts.probe_seed);
    for (int t = 0; t < opts.probe_trials; ++t) {
        VertexFunction f(static_cast<size_t>(g.size()));
        for (auto& z : f) z = {rng::uniform_real(eng, -1.0, 1.0), 0.0};
        std::complex<double> q = m_inner(s.measure, s.entries * f, f);
        b.le("probe " + std::to_string(t + 1) + ": quadratic form is nonnegative", 0.0, q.real());
    }
    return b.cert;
}

// Baseline spectral facts: sigma(S) real nonnegative with simple zero,
// Re sigma(Delta) >= 0 containing 0, conjugation closure; in normalized mode
// also sigma(S) <= 4 and Re sigma(Delta) <= 2.
inline Certificate certify_spectrum_basic(const WeightedDigraph& g, const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "SPECTRUM_BASIC");
    OperatorMatrix s = special_laplacian(g, opts.mode);
    OperatorMatrix d = laplacian(g, opts.mode);
    double norm = s.entries.inf_norm();

    Builder b(TheoremId::spectrum_basic, opts, norm);
    b.digest_from([&](std::ostringstream& os) { canonical_graph(os, g); });
    b.note(opts.mode == Mode::raw ? "mode: raw" : "mode: normalized");

    Spectrum sp = eig_m_symmetric(s, false);
    ComplexSpectrum dp = eig_general(d);
    b.le("eigensolver residual (S) within bound", sp.residual, 1e-9);
    b.le("eigensolver residual (Delta) within bound", dp.residual, 1e-9);

    b.le("smallest eigenvalue of S is nonnegative", 0.0, sp.eigenvalues.front());
    b.flag("0 is a simple eigenvalue of S",
           zero_cluster_size(sp.eigenvalues, norm) == 1);

    double min_re = dp.eigenvalues.front().real();
    for (const auto& z : dp.eigenvalues) min_re = std::min(min_re, z.real());
    b.le("real parts of sigma(Delta) are nonnegative", 0.0, min_re);
    double closest_to_zero = std::abs(dp.eigenvalues.front());
    for (const auto& z : dp.eigenvalues) closest_to_zero = std::min(closest_to_zero, std::abs(z));
    b.identity("0 belongs to sigma(Delta)", closest_to_zero / std::max(1.0, norm));

    std::vector<std::complex<double>> conj;
    for (const auto& z : dp.eigenvalues) conj.push_back(std::conj(z));
    b.identity("sigma(Delta) is closed under conjugation",
               complex_multiset_distance(dp.eigenvalues, conj) / std::max(1.0, norm));

    if (opts.mode == Mode::normalized) {
        b.le("normalized: largest eigenvalue of S is at most 4", sp.eigenvalues.back(), 4.0);
        double max_re = dp.eigenvalues.front().real();
        for (const auto& z : dp.eigenvalues) max_re = std::max(max_re, z.real());
        b.le("normalized: real parts of sigma(Delta) are at most 2", max_re, 2.0);
    }
    return b.cert;
}

// Every eigenvalue of Delta has its doubled real part between the extreme
// eigenvalues of S.
inline Certificate certify_realpart_bound(const WeightedDigraph& g, const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "REALPART_LEMMA");
    OperatorMatrix s = special_laplacian(g, opts.mode);
    OperatorMatrix d = laplacian(g, opts.mode);
    double norm = s.entries.inf_norm();

    Builder b(TheoremId::realpart_lemma, opts, norm);
    b.digest_from([&](std::ostringstream& os) { canonical_graph(os, g); });
    b.note(opts.mode == Mode::raw ? "mode: raw" : "mode: normalized");

    Spectrum sp = eig_m_symmetric(s, false);
    ComplexSpectrum dp = eig_general(d);
    int n = g.size();

    int idx = 0;
    for (const auto& z : dp.eigenvalues) {
        ++idx;
        b.le("lambda_1(S) <= 2 Re lambda_" + std::to_string(idx) + "(Delta)",
             sp.eigenvalues.front(), 2.0 * z.real());
        b.le("2 Re lambda_" + std::to_string(idx) + "(Delta) <= lambda_n(S)", 2.0 * z.real(),
             sp.eigenvalues.back());
    }

    // Positionwise comparison of the sorted lists is not part of the claim;
    // recorded for inspection.
    std::vector<double> re = sorted_real_parts(dp);
    for (int k = 1; k <= n; ++k)
        b.le("sorted position " + std::to_string(k) + ": 2 Re lambda_k(Delta) vs lambda_k(S)",
             2.0 * lambda(re, k), lambda(sp.eigenvalues, k), false);
    return b.cert;
}

// sigma(Delta) of a uniform cycle matches the closed form (b/m)(1 - e^{2 pi i
// l / n}); 2 b/m appears exactly when n is even, and then it is simple.
inline Certificate certify_cycle_spectrum(const WeightedDigraph& g, const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "CYCLE_SPECTRUM");
    CycleShape shape = detect_uniform_cycle(g);
    if (!shape.is_cycle)
        throw std::invalid_argument(
            "CYCLE_SPECTRUM: input must be a uniform directed cycle (one out- and one in-edge "
            "per vertex, constant b and m)");
    if (opts.mode == Mode::normalized)
        throw std::invalid_argument("CYCLE_SPECTRUM: stated for the raw operator only");
    int n = g.size();
    double c = shape.b / shape.m;

    OperatorMatrix d = laplacian(g, Mode::raw);
    ComplexSpectrum dp = eig_general(d);
    ComplexSpectrum closed = cycle_delta_spectrum_closed_form(n);
    for (auto& z : closed.eigenvalues) z *= c;

    Builder b(TheoremId::cycle_spectrum, opts, d.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) { canonical_graph(os, g); });
    b.note("cycle length " + std::to_string(n) + ", b/m = " + std::to_string(c));

    b.identity("sigma(Delta) matches the closed form",
               complex_multiset_distance(dp.eigenvalues, closed.eigenvalues) /
                   std::max(1.0, d.entries.inf_norm()));

    std::vector<double> re = real_parts(dp);
    std::vector<double> mods;
    for (const auto& z : dp.eigenvalues)
        if (std::abs(z.imag()) <= 1e-8 * std::max(1.0, c)) mods.push_back(z.real());
    int at_two = cluster_size_at(mods, 2.0 * c, d.entries.inf_norm());
    if (n % 2 == 0) {
        b.flag("n even: 2 b/m is an eigenvalue and it is simple", at_two == 1);
    } else {
        b.flag("n odd: 2 b/m is not an eigenvalue", at_two == 0);
    }
    b.flag("0 is a simple eigenvalue",
           cluster_size_at(mods, 0.0, d.entries.inf_norm()) == 1);
    return b.cert;
}

// For a uniform cycle, sigma(S) equals 2 Re sigma(Delta) as multisets.
inline Certificate certify_cycle_corollary(const WeightedDigraph& g, const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "CYCLE_COROLLARY");
    CycleShape shape = detect_uniform_cycle(g);
    if (!shape.is_cycle)
        throw std::invalid_argument("CYCLE_COROLLARY: input must be a uniform directed cycle");
    if (opts.mode == Mode::normalized)
        throw std::invalid_argument("CYCLE_COROLLARY: stated for the raw operator only");

    OperatorMatrix s = special_laplacian(g, Mode::raw);
    OperatorMatrix d = laplacian(g, Mode::raw);
    Spectrum sp = eig_m_symmetric(s, false);
    ComplexSpectrum dp = eig_general(d);
    double norm = s.entries.inf_norm();

    Builder b(TheoremId::cycle_corollary, opts, norm);
    b.digest_from([&](std::ostringstream& os) { canonical_graph(os, g); });

    std::vector<double> doubled = real_parts(dp);
    for (double& v : doubled) v *= 2.0;
    b.identity("sigma(S) equals 2 Re sigma(Delta) as multisets",
               real_multiset_distance(sp.eigenvalues, doubled) / std::max(1.0, norm));
    b.identity("lambda_1(S) = 0", std::abs(sp.eigenvalues.front()) / std::max(1.0, norm));
    std::vector<double> re = sorted_real_parts(dp);
    b.identity("lambda_n(S) = 2 max Re sigma(Delta)",
               std::abs(sp.eigenvalues.back() - 2.0 * re.back()) / std::max(1.0, norm));
    return b.cert;
}

// For an induced subgraph H on r of the n vertices,
// lambda_k(S_H) <= lambda_{k+n-r}(S_G).
inline Certificate certify_subgraph_interlace(const WeightedDigraph& g,
                                              const std::set<VertexId>& subset,
                                              const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "SUBGRAPH_INTERLACE");
    if (subset.empty()) throw std::invalid_argument("SUBGRAPH_INTERLACE: empty subset");
    WeightedDigraph h = induced_subgraph(g, subset);

    OperatorMatrix sg = special_laplacian(g, Mode::raw);
    OperatorMatrix sh = special_laplacian(h, Mode::raw, BalancePolicy::allow_unbalanced);
    Spectrum pg = eig_m_symmetric(sg, false);
    Spectrum ph = eig_m_symmetric(sh, false);
    int n = g.size(), r = h.size();

    Builder b(TheoremId::subgraph_interlace, opts, sg.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, g);
        os << "|subset:";
        for (const auto& v : subset) os << v << ",";
    });
    b.note("subgraph on " + std::to_string(r) + " of " + std::to_string(n) + " vertices");
    if (!validate(h).beta_balanced) b.note("subgraph is not flow-balanced; S_H built edge-wise");
    if (opts.mode == Mode::normalized) b.note("certified for the raw operator");

    for (int k = 1; k <= r; ++k)
        b.le("lambda_" + std::to_string(k) + "(S_H) <= lambda_" + std::to_string(k + n - r) +
                 "(S_G)",
             lambda(ph.eigenvalues, k), lambda(pg.eigenvalues, k + n - r));
    for (int k = 1; k <= r; ++k)
        b.le("positionwise lambda_" + std::to_string(k) + "(S_H) vs lambda_" + std::to_string(k) +
                 "(S_G)",
             lambda(ph.eigenvalues, k), lambda(pg.eigenvalues, k), false);
    return b.cert;
}

// For a flower graph G around a core H (petals glued at distinct single
// vertices), lambda_k(S_G) <= lambda_k(S_H) for k <= #H.
inline Certificate certify_flower_monotone(const WeightedDigraph& g,
                                           const std::set<VertexId>& core,
                                           const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "FLOWER_MONOTONE");
    FlowerDecomposition f = certdetail::derive_flower(g, core);
    WeightedDigraph h = induced_subgraph(g, core);

    OperatorMatrix sg = special_laplacian(g, Mode::raw);
    OperatorMatrix sh = special_laplacian(h, Mode::raw, BalancePolicy::allow_unbalanced);
    Spectrum pg = eig_m_symmetric(sg, false);
    Spectrum ph = eig_m_symmetric(sh, false);
    int r = h.size();

    Builder b(TheoremId::flower_monotone, opts, sg.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, g);
        os << "|core:";
        for (const auto& v : core) os << v << ",";
    });
    b.note("flower with " + std::to_string(f.petals.size()) + " petal(s)");
    if (opts.mode == Mode::normalized) b.note("certified for the raw operator");

    for (int k = 1; k <= r; ++k)
        b.le("lambda_" + std::to_string(k) + "(S_G) <= lambda_" + std::to_string(k) + "(S_core)",
             lambda(pg.eigenvalues, k), lambda(ph.eigenvalues, k));
    return b.cert;
}

// Symmetric tree vs the star at a maximum-valency vertex: the whole tree's
// eigenvalues are dominated positionwise by the induced star's, and for
// uniform unit weights also by the canonical star on q = floor(maxdeg / 2)
// leaves.
inline Certificate certify_tree_star_bound(const WeightedDigraph& g, const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "TREE_STAR_BOUND");
    int n = g.size();
    // symmetric tree: undirected support has n-1 edges, every edge two-way
    std::set<std::pair<VertexId, VertexId>> support;
    bool two_way = true;
    for (const auto& e : g.edges()) {
        support.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
        if (!g.has_edge(e.to, e.from)) two_way = false;
    }
    if (!two_way || static_cast<int>(support.size()) != n - 1)
        throw std::invalid_argument("TREE_STAR_BOUND: input must be a symmetric tree");

    int max_valency = 0;
    VertexId center;
    for (int i = 0; i < n; ++i) {
        int v = static_cast<int>(degree_profile(g, g.id(i)).all_neighbors.size());
        if (v > max_valency) {
            max_valency = v;
            center = g.id(i);
        }
    }

    OperatorMatrix sg = special_laplacian(g, Mode::raw);
    Spectrum pg = eig_m_symmetric(sg, false);

    Builder b(TheoremId::tree_star_bound, opts, sg.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) { canonical_graph(os, g); });
    b.note("max valency " + std::to_string(max_valency) + " at vertex " + center);
    if (opts.mode == Mode::normalized) b.note("certified for the raw operator");

    // Induced star heart at the center: the tree is a flower around it.
    std::set<VertexId> heart{center};
    for (const auto& w : degree_profile(g, center).all_neighbors) heart.insert(w);
    WeightedDigraph hstar = induced_subgraph(g, heart);
    Spectrum ph = eig_m_symmetric(special_laplacian(hstar, Mode::raw), false);
    for (int k = 1; k <= hstar.size(); ++k)
        b.le("lambda_" + std::to_string(k) + "(S_tree) <= lambda_" + std::to_string(k) +
                 "(S_star at max-valency vertex)",
             lambda(pg.eigenvalues, k), lambda(ph.eigenvalues, k));

    // Canonical comparison star for unit weights and measures.
    bool uniform = true;
    for (const auto& e : g.edges())
        if (std::abs(e.b - 1.0) > 1e-12) uniform = false;
    for (int i = 0; i < n; ++i)
        if (std::abs(g.measure(i) - 1.0) > 1e-12) uniform = false;
    if (uniform) {
        int q = max_valency / 2;
        b.note("unit weights: canonical star on q = " + std::to_string(q) + " leaves");
        // sigma(S_star_q) = {0, 2 (q-1 times), 2(q+1)}
        std::vector<double> star;
        star.push_back(0.0);
        for (int i = 0; i < q - 1; ++i) star.push_back(2.0);
        if (q >= 1) star.push_back(2.0 * (q + 1));
        for (int k = 1; k <= static_cast<int>(star.size()); ++k)
            b.le("lambda_" + std::to_string(k) + "(S_tree) <= lambda_" + std::to_string(k) +
                     "(S_star_q)",
                 lambda(pg.eigenvalues, k), lambda(star, k));
    } else {
        b.note("non-uniform weights: canonical star comparison skipped");
    }
    return b.cert;
}

// Attaching any graph to G through a single two-way bridge edge can only
// lower the eigenvalues: lambda_k(S_W) <= lambda_k(S_G) for k <= #G, where G
// is the induced core of W.
inline Certificate certify_single_edge_attach(const WeightedDigraph& w,
                                              const std::set<VertexId>& core,
                                              const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(w, "SINGLE_EDGE_ATTACH");
    if (core.empty()) throw std::invalid_argument("SINGLE_EDGE_ATTACH: empty core");
    for (const auto& v : core)
        if (!w.has_vertex(v))
            throw std::invalid_argument("SINGLE_EDGE_ATTACH: unknown core vertex " + v);

    // exactly one undirected bridge between core and the rest
    std::set<std::pair<VertexId, VertexId>> bridges;
    for (const auto& e : w.edges()) {
        bool fa = core.count(e.from) > 0, ta = core.count(e.to) > 0;
        if (fa != ta) bridges.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
    }
    if (bridges.size() != 1)
        throw std::invalid_argument("SINGLE_EDGE_ATTACH: need exactly one bridge edge, found " +
                                    std::to_string(bridges.size()));

    WeightedDigraph h = induced_subgraph(w, core);
    OperatorMatrix sw = special_laplacian(w, Mode::raw);
    OperatorMatrix sh = special_laplacian(h, Mode::raw, BalancePolicy::allow_unbalanced);
    Spectrum pw = eig_m_symmetric(sw, false);
    Spectrum ph = eig_m_symmetric(sh, false);

    Builder b(TheoremId::single_edge_attach, opts, sw.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, w);
        os << "|core:";
        for (const auto& v : core) os << v << ",";
    });
    b.note("bridge " + bridges.begin()->first + " -- " + bridges.begin()->second);
    if (opts.mode == Mode::normalized) b.note("certified for the raw operator");

    for (int k = 1; k <= h.size(); ++k)
        b.le("lambda_" + std::to_string(k) + "(S_whole) <= lambda_" + std::to_string(k) +
                 "(S_core)",
             lambda(pw.eigenvalues, k), lambda(ph.eigenvalues, k));
    return b.cert;
}

namespace certdetail {

// Splits g into the two partial graphs carried by an edge bipartition and
// returns (S_G, S_1, S_2) spectra plus the additivity distance.
struct EdgeSplit {
    WeightedDigraph g1, g2;
    Spectrum pg, p1, p2;
    double additivity = 0.0;
    double norm = 0.0;
    int n = 0;
};

inline EdgeSplit split_edges(const WeightedDigraph& g,
                             const std::vector<std::pair<VertexId, VertexId>>& edge_set) {
    EdgeSplit out;
    std::set<std::pair<VertexId, VertexId>> chosen(edge_set.begin(), edge_set.end());
    for (const auto& e : chosen)
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("edge split: no edge " + e.first + " -> " + e.second);
    std::vector<std::pair<VertexId, VertexId>> rest;
    for (const auto& e : g.edges())
        if (!chosen.count({e.from, e.to})) rest.emplace_back(e.from, e.to);

    out.g1 = partial_graph(g, edge_set);
    out.g2 = partial_graph(g, rest);
    OperatorMatrix sg = special_laplacian(g, Mode::raw);
    OperatorMatrix s1 = special_laplacian(out.g1, Mode::raw, BalancePolicy::allow_unbalanced);
    OperatorMatrix s2 = special_laplacian(out.g2, Mode::raw, BalancePolicy::allow_unbalanced);
    out.additivity = ((s1.entries + s2.entries) - sg.entries).inf_norm();
    out.pg = eig_m_symmetric(sg, false);
    out.p1 = eig_m_symmetric(s1, false);
    out.p2 = eig_m_symmetric(s2, false);
    out.norm = sg.entries.inf_norm();
    out.n = g.size();
    return out;
}

}  // namespace certdetail

// Splitting the edge set over the same vertices gives S_G = S_1 + S_2, and
// the eigenvalues obey the additive two-sided bounds
// lambda_k(S_G) <= lambda_{k+j}(S_1) + lambda_{n-j}(S_2) and
// lambda_k(S_G) >= lambda_{k-j+1}(S_1) + lambda_j(S_2).
inline Certificate certify_edge_weyl(const WeightedDigraph& g,
                                     const std::vector<std::pair<VertexId, VertexId>>& edge_set,
                                     const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "EDGE_WEYL");
    EdgeSplit es = split_edges(g, edge_set);
    int n = es.n;

    Builder b(TheoremId::edge_weyl, opts, es.norm);
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, g);
        os << "|edges:";
        for (const auto& e : edge_set) os << e.first << ">" << e.second << ",";
    });
    b.note("split: " + std::to_string(es.g1.edge_count()) + " + " +
           std::to_string(es.g2.edge_count()) + " edges");
    if (opts.mode == Mode::normalized) b.note("certified for the raw operator");

    b.identity("S_G = S_1 + S_2 as matrices", es.additivity / std::max(1.0, es.norm));

    auto upper = [&](const Spectrum& a, const Spectrum& c, const char* an, const char* cn) {
        for (int k = 1; k <= n; ++k)
            for (int j = 0; j <= n - k; ++j)
                b.le("lambda_" + std::to_string(k) + "(S_G) <= lambda_" + std::to_string(k + j) +
                         "(" + an + ") + lambda_" + std::to_string(n - j) + "(" + cn + ")",
                     lambda(es.pg.eigenvalues, k),
                     lambda(a.eigenvalues, k + j) + lambda(c.eigenvalues, n - j));
    };
    auto lower = [&](const Spectrum& a, const Spectrum& c, const char* an, const char* cn) {
        for (int k = 1; k <= n; ++k)
            for (int j = 1; j <= k; ++j)
                b.ge("lambda_" + std::to_string(k) + "(S_G) >= lambda_" +
                         std::to_string(k - j + 1) + "(" + an + ") + lambda_" + std::to_string(j) +
                         "(" + cn + ")",
                     lambda(es.pg.eigenvalues, k),
                     lambda(a.eigenvalues, k - j + 1) + lambda(c.eigenvalues, j));
    };
    upper(es.p1, es.p2, "S_1", "S_2");
    upper(es.p2, es.p1, "S_2", "S_1");
    lower(es.p1, es.p2, "S_1", "S_2");
    lower(es.p2, es.p1, "S_2", "S_1");
    return b.cert;
}

// The j = 0 / j = 1 cases in isolation: adding edges can only raise each
// eigenvalue, and by at most the largest eigenvalue of the added part.
inline Certificate certify_edge_sandwich(const WeightedDigraph& g,
                                         const std::vector<std::pair<VertexId, VertexId>>& edge_set,
                                         const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "EDGE_SANDWICH");
    EdgeSplit es = split_edges(g, edge_set);
    int n = es.n;

    Builder b(TheoremId::edge_sandwich, opts, es.norm);
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, g);
        os << "|edges:";
        for (const auto& e : edge_set) os << e.first << ">" << e.second << ",";
    });
    if (opts.mode == Mode::normalized) b.note("certified for the raw operator");

    b.identity("S_G = S_1 + S_2 as matrices", es.additivity / std::max(1.0, es.norm));
    for (int k = 1; k <= n; ++k) {
        b.le("lambda_" + std::to_string(k) + "(S_1) <= lambda_" + std::to_string(k) + "(S_G)",
             lambda(es.p1.eigenvalues, k), lambda(es.pg.eigenvalues, k));
        b.le("lambda_" + std::to_string(k) + "(S_2) <= lambda_" + std::to_string(k) + "(S_G)",
             lambda(es.p2.eigenvalues, k), lambda(es.pg.eigenvalues, k));
        b.le("lambda_" + std::to_string(k) + "(S_G) <= lambda_" + std::to_string(k) +
                 "(S_1) + lambda_n(S_2)",
             lambda(es.pg.eigenvalues, k),
             lambda(es.p1.eigenvalues, k) + es.p2.eigenvalues.back());
        b.le("lambda_" + std::to_string(k) + "(S_G) <= lambda_" + std::to_string(k) +
                 "(S_2) + lambda_n(S_1)",
             lambda(es.pg.eigenvalues, k),
             lambda(es.p2.eigenvalues, k) + es.p1.eigenvalues.back());
    }
    return b.cert;
}

// Increasing edge weights entrywise (same vertices, same measures) raises
// every eigenvalue of S.
inline Certificate certify_edge_monotone(const WeightedDigraph& g, const WeightedDigraph& heavier,
                                         const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "EDGE_MONOTONE");
    if (heavier.size() != g.size())
        throw std::invalid_argument("EDGE_MONOTONE: graphs must share the vertex set");
    for (int i = 0; i < g.size(); ++i) {
        if (!heavier.has_vertex(g.id(i)))
            throw std::invalid_argument("EDGE_MONOTONE: graphs must share the vertex set");
        if (std::abs(heavier.measure_of(g.id(i)) - g.measure(i)) > 1e-12)
            throw std::invalid_argument("EDGE_MONOTONE: measures must agree");
    }
    for (const auto& e : g.edges()) {
        double b1 = heavier.has_edge(e.from, e.to) ? heavier.weight(e.from, e.to) : 0.0;
        if (b1 < e.b - 1e-12)
            throw std::invalid_argument("EDGE_MONOTONE: weight of " + e.from + " -> " + e.to +
                                        " decreases");
    }

    OperatorMatrix s0 = special_laplacian(g, Mode::raw, BalancePolicy::allow_unbalanced);
    OperatorMatrix s1 = special_laplacian(heavier, Mode::raw, BalancePolicy::allow_unbalanced);
    Spectrum p0 = eig_m_symmetric(s0, false);
    Spectrum p1 = eig_m_symmetric(s1, false);

    Builder b(TheoremId::edge_monotone, opts, s1.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, g);
        os << "|heavier:";
        canonical_graph(os, heavier);
    });
    if (opts.mode == Mode::normalized) b.note("certified for the raw operator");

    for (int k = 1; k <= g.size(); ++k)
        b.le("lambda_" + std::to_string(k) + "(S) <= lambda_" + std::to_string(k) + "(S_heavier)",
             lambda(p0.eigenvalues, k), lambda(p1.eigenvalues, k));
    return b.cert;
}

// Dirichlet restriction to U: every eigenvalue of Delta^D has its doubled
// real part between the extreme eigenvalues of S^D.
inline Certificate certify_dirichlet_realpart(const WeightedDigraph& g,
                                              const std::set<VertexId>& subset,
                                              const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "DIRICHLET_REALPART");
    if (subset.empty()) throw std::invalid_argument("DIRICHLET_REALPART: empty subset");
    OperatorMatrix dd = dirichlet(laplacian(g, opts.mode), subset);
    OperatorMatrix sd = dirichlet(special_laplacian(g, opts.mode), subset);
    Spectrum sp = eig_m_symmetric(sd, false);
    ComplexSpectrum dp = eig_general(dd);
    int r = sd.size();
    double norm = sd.entries.inf_norm();

    Builder b(TheoremId::dirichlet_realpart, opts, norm);
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, g);
        os << "|subset:";
        for (const auto& v : subset) os << v << ",";
    });
    b.note(opts.mode == Mode::raw ? "mode: raw" : "mode: normalized");

    int idx = 0;
    for (const auto& z : dp.eigenvalues) {
        ++idx;
        b.le("lambda_1(S^D) <= 2 Re lambda_" + std::to_string(idx) + "(Delta^D)",
             sp.eigenvalues.front(), 2.0 * z.real());
        b.le("2 Re lambda_" + std::to_string(idx) + "(Delta^D) <= lambda_" + std::to_string(r) +
                 "(S^D)",
             2.0 * z.real(), sp.eigenvalues.back());
    }
    return b.cert;
}

// Dirichlet interlacing: the S^D spectrum on r vertices sits inside the full
// spectrum with offset n - r on the upper side and position k on the lower.
inline Certificate certify_dirichlet_interlace(const WeightedDigraph& g,
                                               const std::set<VertexId>& subset,
                                               const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "DIRICHLET_INTERLACE");
    if (subset.empty()) throw std::invalid_argument("DIRICHLET_INTERLACE: empty subset");
    OperatorMatrix sg = special_laplacian(g, opts.mode);
    OperatorMatrix sd = dirichlet(sg, subset);
    Spectrum pg = eig_m_symmetric(sg, false);
    Spectrum pd = eig_m_symmetric(sd, false);
    int n = g.size(), r = sd.size();

    Builder b(TheoremId::dirichlet_interlace, opts, sg.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, g);
        os << "|subset:";
        for (const auto& v : subset) os << v << ",";
    });
    b.note(opts.mode == Mode::raw ? "mode: raw" : "mode: normalized");

    for (int k = 1; k <= r; ++k) {
        b.le("lambda_" + std::to_string(k) + "(S^D) <= lambda_" + std::to_string(k + n - r) +
                 "(S_G)",
             lambda(pd.eigenvalues, k), lambda(pg.eigenvalues, k + n - r));
        b.le("lambda_" + std::to_string(k) + "(S_G) <= lambda_" + std::to_string(k) + "(S^D)",
             lambda(pg.eigenvalues, k), lambda(pd.eigenvalues, k));
    }
    return b.cert;
}

// Subgraph and Dirichlet bounds combined: lambda_{k+n-r}(S_G) dominates both
// lambda_k(S_H) and lambda_k(S^D_H), and lambda_n(S_G) dominates the doubled
// extreme real parts of both restricted non-self-adjoint operators.
inline Certificate certify_dirichlet_max_combine(const WeightedDigraph& g,
                                                 const std::set<VertexId>& subset,
                                                 const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "DIRICHLET_MAX_COMBINE");
    if (subset.empty()) throw std::invalid_argument("DIRICHLET_MAX_COMBINE: empty subset");
    WeightedDigraph h = induced_subgraph(g, subset);

    OperatorMatrix sg = special_laplacian(g, Mode::raw);
    OperatorMatrix sd = dirichlet(sg, subset);
    OperatorMatrix sh = special_laplacian(h, Mode::raw, BalancePolicy::allow_unbalanced);
    OperatorMatrix dh = laplacian(h, Mode::raw);
    OperatorMatrix dd = dirichlet(laplacian(g, Mode::raw), subset);

    Spectrum pg = eig_m_symmetric(sg, false);
    Spectrum pd = eig_m_symmetric(sd, false);
    Spectrum ph = eig_m_symmetric(sh, false);
    ComplexSpectrum qh = eig_general(dh);
    ComplexSpectrum qd = eig_general(dd);
    int n = g.size(), r = h.size();

    Builder b(TheoremId::dirichlet_max_combine, opts, sg.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, g);
        os << "|subset:";
        for (const auto& v : subset) os << v << ",";
    });
    bool h_balanced = validate(h).beta_balanced;
    if (!h_balanced)
        b.note("subgraph is not flow-balanced: its adjoint is taken by definition");
    if (opts.mode == Mode::normalized) b.note("certified for the raw operator");

    for (int k = 1; k <= r; ++k) {
        double bound = lambda(pg.eigenvalues, k + n - r);
        b.ge("lambda_" + std::to_string(k + n - r) + "(S_G) >= lambda_" + std::to_string(k) +
                 "(S_H)",
             bound, lambda(ph.eigenvalues, k));
        b.ge("lambda_" + std::to_string(k + n - r) + "(S_G) >= lambda_" + std::to_string(k) +
                 "(S^D_H)",
             bound, lambda(pd.eigenvalues, k));
        b.ge("lambda_" + std::to_string(k + n - r) + "(S_G) >= max of the two",
             bound, std::max(lambda(ph.eigenvalues, k), lambda(pd.eigenvalues, k)), false);
    }

    std::vector<double> re_h = sorted_real_parts(qh);
    std::vector<double> re_d = sorted_real_parts(qd);
    b.ge("lambda_n(S_G) >= 2 max Re sigma(Delta_H)", pg.eigenvalues.back(), 2.0 * re_h.back());
    b.ge("lambda_n(S_G) >= 2 max Re sigma(Delta^D_H)", pg.eigenvalues.back(), 2.0 * re_d.back());
    return b.cert;
}

// On a uniform cycle, the largest real part of sigma(Delta) dominates the
// largest real parts of both restrictions to a connected arc.
inline Certificate certify_cycle_subgraph(const WeightedDigraph& g,
                                          const std::set<VertexId>& subset,
                                          const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "CYCLE_SUBGRAPH_COROLLARY");
    CycleShape shape = detect_uniform_cycle(g);
    if (!shape.is_cycle)
        throw std::invalid_argument("CYCLE_SUBGRAPH_COROLLARY: input must be a uniform directed cycle");
    if (subset.empty()) throw std::invalid_argument("CYCLE_SUBGRAPH_COROLLARY: empty subset");

    WeightedDigraph h = induced_subgraph(g, subset);
    // connected subgraphs of a cycle are exactly the contiguous arcs
    if (!detail::undirected_connected(h))
        throw std::invalid_argument("CYCLE_SUBGRAPH_COROLLARY: subset must be a contiguous arc");

    OperatorMatrix dg = laplacian(g, Mode::raw);
    OperatorMatrix dh = laplacian(h, Mode::raw);
    OperatorMatrix dd = dirichlet(dg, subset);
    ComplexSpectrum qg = eig_general(dg);
    ComplexSpectrum qh = eig_general(dh);
    ComplexSpectrum qd = eig_general(dd);

    Builder b(TheoremId::cycle_subgraph_corollary, opts, dg.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, g);
        os << "|subset:";
        for (const auto& v : subset) os << v << ",";
    });
    b.note("arc of " + std::to_string(h.size()) + " of " + std::to_string(g.size()) +
           " cycle vertices");

    double re_g = sorted_real_parts(qg).back();
    double re_h = sorted_real_parts(qh).back();
    double re_d = sorted_real_parts(qd).back();
    b.ge("max Re sigma(Delta_C) >= max Re sigma(Delta_arc)", re_g, re_h);
    b.ge("max Re sigma(Delta_C) >= max Re sigma(Delta^D_arc)", re_g, re_d);

    Spectrum sp = eig_m_symmetric(special_laplacian(g, Mode::raw), false);
    b.identity("lambda_n(S_C) = 2 max Re sigma(Delta_C)",
               std::abs(sp.eigenvalues.back() - 2.0 * re_g) /
                   std::max(1.0, dg.entries.inf_norm()));
    return b.cert;
}

// Partition bound: with interiors that no edge joins,
// lambda_{k+l}(S_G) <= max(lambda_k(S^D_intA), lambda_l(S^D_intB)).
inline Certificate certify_partition_bound(const WeightedDigraph& g, const Partition& p,
                                           const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "PARTITION_BOUND");
    PartitionReport pr = validate_partition(g, p);
    if (!pr.all_pass())
        throw std::invalid_argument("PARTITION_BOUND: invalid partition: " + pr.detail);

    std::set<VertexId> ia = interior_of(g, p.a), ib = interior_of(g, p.b);
    OperatorMatrix sg = special_laplacian(g, opts.mode);
    OperatorMatrix sa = dirichlet(sg, ia);
    OperatorMatrix sb = dirichlet(sg, ib);
    Spectrum pg = eig_m_symmetric(sg, false);
    Spectrum pa = eig_m_symmetric(sa, false);
    Spectrum pb = eig_m_symmetric(sb, false);
    int na = sa.size(), nb = sb.size();

    Builder b(TheoremId::partition_bound, opts, sg.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, g);
        os << "|A:";
        for (const auto& v : p.a) os << v << ",";
        os << "|B:";
        for (const auto& v : p.b) os << v << ",";
    });
    b.note("interiors: " + std::to_string(na) + " and " + std::to_string(nb) + " vertices");
    b.note(opts.mode == Mode::raw ? "mode: raw" : "mode: normalized");

    for (int k = 1; k <= na; ++k)
        for (int l = 1; l <= nb; ++l)
            b.le("lambda_" + std::to_string(k + l) + "(S_G) <= max(lambda_" + std::to_string(k) +
                     "(S^D_intA), lambda_" + std::to_string(l) + "(S^D_intB))",
                 lambda(pg.eigenvalues, k + l),
                 std::max(lambda(pa.eigenvalues, k), lambda(pb.eigenvalues, l)));
    return b.cert;
}

// Partition bound for the spectral gap through real parts:
// lambda_2(S_G) <= max over both interiors of 2 min Re sigma(Delta^D); on a
// uniform cycle the same holds for Re lambda_2(Delta) without the doubling.
inline Certificate certify_partition_realpart(const WeightedDigraph& g, const Partition& p,
                                              const CertifyOptions& opts) {
    using namespace certdetail;
    require_valid(g, "PARTITION_REALPART");
    PartitionReport pr = validate_partition(g, p);
    if (!pr.all_pass())
        throw std::invalid_argument("PARTITION_REALPART: invalid partition: " + pr.detail);

    std::set<VertexId> ia = interior_of(g, p.a), ib = interior_of(g, p.b);
    OperatorMatrix sg = special_laplacian(g, opts.mode);
    OperatorMatrix da = dirichlet(laplacian(g, opts.mode), ia);
    OperatorMatrix db = dirichlet(laplacian(g, opts.mode), ib);
    OperatorMatrix sa = dirichlet(sg, ia);
    OperatorMatrix sb = dirichlet(sg, ib);
    Spectrum pg = eig_m_symmetric(sg, false);
    ComplexSpectrum qa = eig_general(da);
    ComplexSpectrum qb = eig_general(db);

    Builder b(TheoremId::partition_realpart, opts, sg.entries.inf_norm());
    b.digest_from([&](std::ostringstream& os) {
        canonical_graph(os, g);
        os << "|A:";
        for (const auto& v : p.a) os << v << ",";
        os << "|B:";
        for (const auto& v : p.b) os << v << ",";
    });
    b.note(opts.mode == Mode::raw ? "mode: raw" : "mode: normalized");

    double min_re_a = sorted_real_parts(qa).front();
    double min_re_b = sorted_real_parts(qb).front();
    double bound = std::max(2.0 * min_re_a, 2.0 * min_re_b);
    b.le("lambda_2(S_G) <= max(2 min Re sigma(Delta^D_intA), 2 min Re sigma(Delta^D_intB))",
         lambda(pg.eigenvalues, 2), bound);

    // chain links, recorded
    Spectrum pa = eig_m_symmetric(sa, false);
    Spectrum pb = eig_m_symmetric(sb, false);
    b.le("lambda_2(S_G) <= max(lambda_1(S^D_intA), lambda_1(S^D_intB))",
         lambda(pg.eigenvalues, 2),
         std::max(pa.eigenvalues.front(), pb.eigenvalues.front()), false);
    b.le("lambda_1(S^D_intA) <= 2 min Re sigma(Delta^D_intA)", pa.eigenvalues.front(),
         2.0 * min_re_a, false);
    b.le("lambda_1(S^D_intB) <= 2 min Re sigma(Delta^D_intB)", pb.eigenvalues.front(),
         2.0 * min_re_b, false);

    CycleShape shape = detect_uniform_cycle(g);
    if (shape.is_cycle && opts.mode == Mode::raw) {
        ComplexSpectrum qg = eig_general(laplacian(g, Mode::raw));
        std::vector<double> re = sorted_real_parts(qg);
        b.note("uniform cycle: second real part bound included");
        b.le("cycle: Re lambda_2(Delta) <= max(min Re sigma(Delta^D_intA), min Re "
             "sigma(Delta^D_intB))",
             lambda(re, 2), std::max(min_re_a, min_re_b));
    }
    return b.cert;
}

// ---- dispatch ----

struct TheoremInput {
    WeightedDigraph g;
    std::optional<WeightedDigraph> second{};                            // edge-monotone
    std::optional<std::set<VertexId>> subset{};                         // vertex-set theorems
    std::optional<std::vector<std::pair<VertexId, VertexId>>> edge_set{};  // edge-split theorems
    std::optional<Partition> partition{};                               // partition theorems
};

inline Certificate certify(TheoremId t, const TheoremInput& in, const CertifyOptions& opts) {
    auto need_subset = [&]() -> const std::set<VertexId>& {
        if (!in.subset)
            throw std::invalid_argument(to_string(t) + ": needs a vertex subset parameter");
        return *in.subset;
    };
    switch (t) {
        case TheoremId::green_identity: return certify_green_identity(in.g, opts);
        case TheoremId::positivity_s: return certify_positivity(in.g, opts);
        case TheoremId::spectrum_basic: return certify_spectrum_basic(in.g, opts);
        case TheoremId::realpart_lemma: return certify_realpart_bound(in.g, opts);
        case TheoremId::cycle_spectrum: return certify_cycle_spectrum(in.g, opts);
        case TheoremId::cycle_corollary: return certify_cycle_corollary(in.g, opts);
        case TheoremId::subgraph_interlace:
            return certify_subgraph_interlace(in.g, need_subset(), opts);
        case TheoremId::flower_monotone:
            return certify_flower_monotone(in.g, need_subset(), opts);
        case TheoremId::tree_star_bound: return certify_tree_star_bound(in.g, opts);
        case TheoremId::single_edge_attach:
            return certify_single_edge_attach(in.g, need_subset(), opts);
        case TheoremId::edge_weyl:
            if (!in.edge_set) throw std::invalid_argument("EDGE_WEYL: needs an edge set parameter");
            return certify_edge_weyl(in.g, *in.edge_set, opts);
        case TheoremId::edge_sandwich:
            if (!in.edge_set)
                throw std::invalid_argument("EDGE_SANDWICH: needs an edge set parameter");
            return certify_edge_sandwich(in.g, *in.edge_set, opts);
        case TheoremId::edge_monotone:
            if (!in.second)
                throw std::invalid_argument("EDGE_MONOTONE: needs a comparison graph parameter");
            return certify_edge_monotone(in.g, *in.second, opts);
        case TheoremId::dirichlet_realpart:
            return certify_dirichlet_realpart(in.g, need_subset(), opts);
        case TheoremId::dirichlet_interlace:
            return certify_dirichlet_interlace(in.g, need_subset(), opts);
        case TheoremId::dirichlet_max_combine:
            return certify_dirichlet_max_combine(in.g, need_subset(), opts);
        case TheoremId::cycle_subgraph_corollary: return certify_cycle_subgraph(in.g, need_subset(), opts);
        case TheoremId::partition_bound:
            if (!in.partition)
                throw std::invalid_argument("PARTITION_BOUND: needs a partition parameter");
            return certify_partition_bound(in.g, *in.partition, opts);
        case TheoremId::partition_realpart:
            if (!in.partition)
                throw std::invalid_argument("PARTITION_REALPART: needs a partition parameter");
            return certify_partition_realpart(in.g, *in.partition, opts);
    }
    throw std::logic_error("certify: unknown theorem id");
}

}  // namespace spectra
