#pragma once

#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/matrix.hpp"

namespace spectra {

enum class Mode { raw, normalized };

enum class MeasureKind { given_m, out_degree };

struct Measure {
    std::vector<double> values;  // aligned with the owning order
    MeasureKind kind = MeasureKind::given_m;
};

enum class OperatorKind { delta, delta_star, special_s };

inline const char* to_string(OperatorKind k) {
    switch (k) {
        case OperatorKind::delta: return "Delta";
        case OperatorKind::delta_star: return "DeltaStar";
        case OperatorKind::special_s: return "S";
    }
    return "?";
}

struct OperatorMatrix {
    Matrix entries;
    std::vector<VertexId> order;  // row/column i corresponds to order[i]
    Measure measure;
    OperatorKind kind = OperatorKind::delta;
    bool dirichlet_restricted = false;
    std::vector<VertexId> restricted_to;  // nonempty iff dirichlet_restricted

    int size() const { return entries.rows(); }
};

// Complex function on the vertex set, aligned with the graph's vertex order.
using VertexFunction = std::vector<std::complex<double>>;

inline Measure make_measure(const WeightedDigraph& g, Mode mode) {
    Measure m;
    if (mode == Mode::raw) {
        m.values = g.measures();
        m.kind = MeasureKind::given_m;
        return m;
    }
    m.kind = MeasureKind::out_degree;
    m.values.resize(static_cast<size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) {
        double b = g.beta_plus(i);
        if (b <= 0.0)
            throw std::invalid_argument("normalized mode: vertex " + g.id(i) +
                                        " has no out-edges (beta_plus = 0)");
        m.values[static_cast<size_t>(i)] = b;
    }
    return m;
}

// Out-degree Laplacian: (Delta f)(x) = (1/m(x)) sum_{y in V_x+} b(x,y)(f(x)-f(y)).
inline OperatorMatrix laplacian(const WeightedDigraph& g, Mode mode = Mode::raw) {
    OperatorMatrix a;
    a.order = g.vertex_ids();
    a.measure = make_measure(g, mode);
    a.kind = OperatorKind::delta;
    int n = g.size();
    a.entries = Matrix(n, n);
    for (int i = 0; i < n; ++i) {
        double mi = a.measure.values[static_cast<size_t>(i)];
        for (const auto& [j, b] : g.out_edges(i)) {
            a.entries(i, i) += b / mi;
            a.entries(i, j) -= b / mi;
        }
    }
    return a;
}

// m-adjoint M^{-1} A^T M of a matrix on the same weighted space.
inline OperatorMatrix m_adjoint(const OperatorMatrix& a) {
    OperatorMatrix r = a;
    int n = a.entries.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.entries(i, j) = a.measure.values[static_cast<size_t>(j)] * a.entries(j, i) /
                              a.measure.values[static_cast<size_t>(i)];
    if (a.kind == OperatorKind::delta) r.kind = OperatorKind::delta_star;
    else if (a.kind == OperatorKind::delta_star) r.kind = OperatorKind::delta;
    return r;
}

namespace detail {

inline void require_balanced(const WeightedDigraph& g, double tol, const char* who) {
    double scale = 1.0;
    for (int i = 0; i < g.size(); ++i) scale = std::max(scale, g.beta_plus(i));
    int worst = -1;
    double worst_defect = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        double defect = g.beta_plus(i) - g.beta_minus(i);
        if (std::abs(defect) > std::abs(worst_defect)) {
            worst_defect = defect;
            worst = i;
        }
    }
    if (worst >= 0 && std::abs(worst_defect) > tol * scale)
        throw std::invalid_argument(std::string(who) + ": graph is not balanced; worst vertex " +
                                    g.id(worst) + " has defect " + std::to_string(worst_defect));
}

}  // namespace detail

// In-degree form of the adjoint:
// (Delta* f)(x) = (1/m(x)) sum_{y in V_x-} b(y,x)(f(x)-f(y)).
// This is the m-adjoint of laplacian() exactly when the graph is balanced, so
// balance is a precondition; both constructions are compared at build time.
inline OperatorMatrix adjoint_laplacian(const WeightedDigraph& g, Mode mode = Mode::raw,
                                        double balance_tol = 1e-9) {
    detail::require_balanced(g, balance_tol, "adjoint_laplacian");
    OperatorMatrix a;
    a.order = g.vertex_ids();
    a.measure = make_measure(g, mode);
    a.kind = OperatorKind::delta_star;
    int n = g.size();
    a.entries = Matrix(n, n);
    for (int i = 0; i < n; ++i) {
        double mi = a.measure.values[static_cast<size_t>(i)];
        for (const auto& [j, b] : g.in_edges(i)) {
            a.entries(i, i) += b / mi;
            a.entries(i, j) -= b / mi;
        }
    }
    // The two constructions differ exactly by diag((beta+ - beta-)/m), which
    // the balance precondition bounds; off-diagonals must agree to rounding.
    OperatorMatrix cross = m_adjoint(laplacian(g, mode));
    double scale = std::max(1.0, a.entries.inf_norm());
    for (int i = 0; i < n; ++i) {
        double mi = a.measure.values[static_cast<size_t>(i)];
        double defect_slack = std::abs(g.beta_plus(i) - g.beta_minus(i)) / mi;
        for (int j = 0; j < n; ++j) {
            double allowed = 1e-12 * scale + (i == j ? defect_slack : 0.0);
            if (std::abs(a.entries(i, j) - cross.entries(i, j)) > allowed)
                throw std::logic_error("adjoint_laplacian: formula and m-adjoint disagree at (" +
                                       a.order[static_cast<size_t>(i)] + "," +
                                       a.order[static_cast<size_t>(j)] + ")");
        }
    }
    return a;
}

enum class BalancePolicy { require, allow_unbalanced };

// Special operator S = Delta + Delta*, assembled edge-wise from the
// symmetrized weights a(x,y) = b(x,y) + b(y,x):
// (S f)(x) = (1/m(x)) sum_y a(x,y)(f(x)-f(y)).
// Always m-symmetric and positive semidefinite. On balanced graphs it equals
// laplacian + adjoint_laplacian entrywise; balance is required by default.
// Theorem checks on arbitrary subgraphs pass allow_unbalanced, where the
// symmetrized form is the operator the subgraph statements are about.
inline OperatorMatrix special_laplacian(const WeightedDigraph& g, Mode mode = Mode::raw,
                                        BalancePolicy policy = BalancePolicy::require,
                                        double balance_tol = 1e-9) {
    if (policy == BalancePolicy::require)
        detail::require_balanced(g, balance_tol, "special_laplacian");
    OperatorMatrix a;
    a.order = g.vertex_ids();
    a.measure = make_measure(g, mode);
    a.kind = OperatorKind::special_s;
    int n = g.size();
    a.entries = Matrix(n, n);
    for (int i = 0; i < n; ++i) {
        double mi = a.measure.values[static_cast<size_t>(i)];
        for (const auto& [j, b] : g.out_edges(i)) {
            a.entries(i, i) += b / mi;
            a.entries(i, j) -= b / mi;
        }
        for (const auto& [j, b] : g.in_edges(i)) {
            a.entries(i, i) += b / mi;
            a.entries(i, j) -= b / mi;
        }
    }
    return a;
}

// Dirichlet restriction: principal submatrix on U. Diagonal entries keep the
// full-graph degree terms; only rows and columns outside U are dropped.
inline OperatorMatrix dirichlet(const OperatorMatrix& a, const std::set<VertexId>& u) {
    if (u.empty()) throw std::invalid_argument("dirichlet: empty restriction set");
    std::vector<int> keep;
    for (int i = 0; i < a.size(); ++i)
        if (u.count(a.order[static_cast<size_t>(i)])) keep.push_back(i);
    if (keep.size() != u.size())
        throw std::invalid_argument("dirichlet: restriction set contains unknown vertices");
    OperatorMatrix r;
    r.kind = a.kind;
    r.dirichlet_restricted = true;
    r.measure.kind = a.measure.kind;
    int k = static_cast<int>(keep.size());
    r.entries = Matrix(k, k);
    for (int i = 0; i < k; ++i) {
        r.order.push_back(a.order[static_cast<size_t>(keep[static_cast<size_t>(i)])]);
        r.restricted_to.push_back(r.order.back());
        r.measure.values.push_back(a.measure.values[static_cast<size_t>(keep[static_cast<size_t>(i)])]);
        for (int j = 0; j < k; ++j)
            r.entries(i, j) =
                a.entries(keep[static_cast<size_t>(i)], keep[static_cast<size_t>(j)]);
    }
    return r;
}

// Sum over directed edges of b(x,y) (f(x)-f(y)) conj(h(x)-h(y)).
inline std::complex<double> green_form(const WeightedDigraph& g, const VertexFunction& f,
                                       const VertexFunction& h) {
    if (static_cast<int>(f.size()) != g.size() || static_cast<int>(h.size()) != g.size())
        throw std::invalid_argument("green_form: function size does not match the vertex set");
    std::complex<double> s = 0.0;
    for (int i = 0; i < g.size(); ++i)
        for (const auto& [j, b] : g.out_edges(i))
            s += b * (f[static_cast<size_t>(i)] - f[static_cast<size_t>(j)]) *
                 std::conj(h[static_cast<size_t>(i)] - h[static_cast<size_t>(j)]);
    return s;
}

// m-inner product (f, h)_m = sum_x m(x) f(x) conj(h(x)).
inline std::complex<double> m_inner(const Measure& m, const VertexFunction& f,
                                    const VertexFunction& h) {
    if (f.size() != m.values.size() || h.size() != m.values.size())
        throw std::invalid_argument("m_inner: size mismatch");
    std::complex<double> s = 0.0;
    for (size_t i = 0; i < f.size(); ++i) s += m.values[i] * f[i] * std::conj(h[i]);
    return s;
}

// Largest m-symmetry defect max |m(x)A[x,y] - m(y)A[y,x]| of a matrix.
inline double m_asymmetry(const OperatorMatrix& a) {
    double worst = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            worst = std::max(worst, std::abs(a.measure.values[static_cast<size_t>(i)] * a.entries(i, j) -
                                             a.measure.values[static_cast<size_t>(j)] * a.entries(j, i)));
    return worst;
}

}  // namespace spectra
