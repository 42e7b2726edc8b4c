// Command-line front end: graph I/O, operator assembly, spectra, certificate
// running, and batch fuzzing. Exit codes: 0 pass, 1 certificate failure,
// 2 input or validation error.
#include <algorithm>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectra/spectra.hpp"

namespace {

using namespace spectra;

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file: " + path);
    return read_stream(f);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot open output file: " + out_path);
    f << text;
}

void warn_all(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::string fmt_real(double x) {
    char b[64];
    std::snprintf(b, sizeof b, "%.10g", x);
    return b;
}

std::string fmt_complex(std::complex<double> z) {
    if (z.imag() == 0.0) return fmt_real(z.real());
    char b[128];
    std::snprintf(b, sizeof b, "%.10g %c %.10gi", z.real(), z.imag() < 0.0 ? '-' : '+',
                  std::abs(z.imag()));
    return b;
}

Mode mode_from(const std::string& s) {
    return s == "normalized" ? Mode::normalized : Mode::raw;
}

OperatorKind operator_from(const std::string& s) {
    if (s == "Delta") return OperatorKind::delta;
    if (s == "DeltaStar") return OperatorKind::delta_star;
    return OperatorKind::special_s;
}

std::set<VertexId> split_ids(const std::string& csv) {
    std::set<VertexId> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.insert(item);
    }
    return out;
}

std::vector<std::pair<VertexId, VertexId>> split_edges(const std::string& csv) {
    std::vector<std::pair<VertexId, VertexId>> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto sep = item.find(':');
        if (sep == std::string::npos) sep = item.find('>');
        if (sep == std::string::npos || sep == 0 || sep + 1 == item.size())
            throw ParseError("--edge-set entries must look like from:to, got \"" + item + "\"");
        out.emplace_back(item.substr(0, sep), item.substr(sep + 1));
    }
    return out;
}

struct CommonOpts {
    std::string input;        // "" or "-" means stdin
    std::string out_path;     // "" means stdout
    std::string output = "text";
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_input = true) {
    if (with_input)
        cmd->add_option("--input", c.input, "graph JSON file (default: stdin)");
    cmd->add_option("--out", c.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--output", c.output, "report format")
        ->check(CLI::IsMember({"text", "json"}));
}

// ---------------------------------------------------------------- validate

int run_validate(const CommonOpts& c) {
    ParsedGraph pg = parse_graph(read_input(c.input));
    warn_all(pg.warnings);
    ValidationReport r = validate(pg.graph);
    if (c.output == "json") {
        json j = validation_to_json(r);
        j["n"] = pg.graph.size();
        j["edge_count"] = pg.graph.edge_count();
        emit(j.dump(2) + "\n", c.out_path);
    } else {
        std::ostringstream t;
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        t << "vertices " << pg.graph.size() << ", edges " << pg.graph.edge_count() << "\n"
          << "  no loops, positive weights:   " << yn(!r.has_loops && r.weights_positive) << "\n"
          << "  out- and in-neighbors at all: " << yn(r.hypothesis_cnx) << "\n"
          << "  connected (undirected):       " << yn(r.connected) << "\n"
          << "  strongly connected:           " << yn(r.strongly_connected) << "\n"
          << "  flow balance at each vertex:  " << yn(r.beta_balanced);
        if (!r.beta_balanced)
            t << "  (worst defect " << fmt_real(r.worst_defect) << " at \""
              << r.worst_defect_vertex << "\")";
        t << "\n" << (r.all_pass() ? "PASS" : "FAIL") << "\n";
        emit(t.str(), c.out_path);
    }
    return r.all_pass() ? 0 : 2;
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(const CommonOpts& c, const std::string& op_name, const std::string& mode_name,
                 bool allow_unbalanced, const std::string& matrix_out) {
    ParsedGraph pg = parse_graph(read_input(c.input));
    warn_all(pg.warnings);
    const WeightedDigraph& g = pg.graph;
    Mode mode = mode_from(mode_name);
    OperatorKind kind = operator_from(op_name);

    OperatorMatrix op;
    if (kind == OperatorKind::delta) {
        op = laplacian(g, mode);
    } else if (kind == OperatorKind::delta_star) {
        op = adjoint_laplacian(g, mode);
    } else {
        op = special_laplacian(g, mode,
                               allow_unbalanced ? BalancePolicy::allow_unbalanced
                                                : BalancePolicy::require);
    }
    if (!matrix_out.empty()) emit(operator_to_json(op).dump(2) + "\n", matrix_out);

    std::vector<std::complex<double>> eigs;
    double residual = 0.0;
    if (kind == OperatorKind::special_s) {
        Spectrum s = eig_m_symmetric(op, false);
        for (double x : s.eigenvalues) eigs.emplace_back(x, 0.0);
        residual = s.residual;
    } else {
        ComplexSpectrum s = eig_general(op);
        eigs = s.eigenvalues;
        residual = s.residual;
    }

    if (c.output == "json") {
        emit(spectrum_report_json(op, mode_name, eigs, residual).dump(2) + "\n", c.out_path);
    } else {
        std::ostringstream t;
        t << "sigma(" << op_name << "), mode " << mode_name << ", n " << op.size() << "\n";
        for (auto z : eigs) t << "  " << fmt_complex(z) << "\n";
        t << "residual " << fmt_real(residual) << "\n";
        emit(t.str(), c.out_path);
    }
    return 0;
}

// ---------------------------------------------------------------- certify

std::string certificate_text(const Certificate& cert) {
    std::ostringstream t;
    t << "theorem " << to_string(cert.theorem) << "\n"
      << "input digest " << cert.input_digest << "\n";
    for (const auto& n : cert.notes) t << "note: " << n << "\n";
    for (const auto& ck : cert.checks) {
        t << "  [" << (ck.holds() ? "ok" : "VIOLATED") << (ck.asserted ? "" : ", recorded")
          << "] " << ck.desc << ": lhs " << fmt_real(ck.lhs) << ", rhs " << fmt_real(ck.rhs)
          << ", margin " << fmt_real(ck.margin) << "\n";
    }
    t << (cert.pass ? "PASS" : "FAIL") << "\n";
    return t.str();
}

int run_certify(const CommonOpts& c, const std::string& theorem, const std::string& mode_name,
                double tol, uint64_t seed, int trials, const std::string& params_path,
                const std::string& subset_csv, const std::string& core_csv,
                const std::string& edge_csv, const std::string& part_a_csv,
                const std::string& part_b_csv) {
    TheoremId t = theorem_from_string(theorem);
    ParsedGraph pg = parse_graph(read_input(c.input));
    warn_all(pg.warnings);

    TheoremInput in;
    in.g = pg.graph;
    if (!params_path.empty()) {
        CertifyParams p = parse_params(read_input(params_path));
        warn_all(p.warnings);
        if (p.subset) in.subset = std::move(p.subset);
        if (p.core) in.subset = std::move(p.core);
        if (p.edge_set) in.edge_set = std::move(p.edge_set);
        if (p.partition) in.partition = std::move(p.partition);
        if (p.second) in.second = std::move(p.second);
    }
    if (!subset_csv.empty()) in.subset = split_ids(subset_csv);
    if (!core_csv.empty()) in.subset = split_ids(core_csv);
    if (!edge_csv.empty()) in.edge_set = split_edges(edge_csv);
    if (!part_a_csv.empty() || !part_b_csv.empty()) {
        Partition p;
        p.a = split_ids(part_a_csv);
        p.b = split_ids(part_b_csv);
        in.partition = std::move(p);
    }

    CertifyOptions opts;
    opts.tol = tol;
    opts.identity_tol = std::min(opts.identity_tol, tol);
    opts.mode = mode_from(mode_name);
    opts.probe_seed = seed;
    opts.probe_trials = trials;
    Certificate cert = certify(t, in, opts);

    if (c.output == "json")
        emit(certificate_to_json(cert).dump(2) + "\n", c.out_path);
    else
        emit(certificate_text(cert), c.out_path);
    return cert.pass ? 0 : 1;
}

// ---------------------------------------------------------------- batch

int run_batch(const CommonOpts& c, const std::string& theorem, const std::string& mode_name,
              double tol, uint64_t seed, int trials, int n) {
    TheoremId t = theorem_from_string(theorem);
    BatchOptions bo;
    bo.trials = trials;
    bo.seed = seed;
    bo.n = n;
    bo.certify.tol = tol;
    bo.certify.identity_tol = std::min(bo.certify.identity_tol, tol);
    bo.certify.mode = mode_from(mode_name);
    BatchResult r = batch_certify(t, bo);

    if (c.output == "json") {
        json j = batch_result_to_json(r);
        j["seed"] = seed;
        j["n"] = n;
        emit(j.dump(2) + "\n", c.out_path);
    } else {
        std::ostringstream t2;
        t2 << "theorem " << to_string(r.theorem) << ", trials " << r.trials << ", seed " << seed
           << ", n " << n << "\n"
           << "passed " << r.passed << ", failed " << r.failed << "\n"
           << "worst asserted margin " << fmt_real(r.min_margin);
        if (!r.min_margin_desc.empty()) t2 << " (" << r.min_margin_desc << ")";
        t2 << "\n" << (r.failed == 0 ? "PASS" : "FAIL") << "\n";
        if (r.first_failure)
            t2 << certificate_to_json(*r.first_failure).dump(2) << "\n";
        emit(t2.str(), c.out_path);
    }
    return r.failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- generate

int run_generate(const CommonOpts& c, const std::string& family, int n, int q, uint64_t seed,
                 int extra, double b, double m) {
    WeightedDigraph g;
    if (family == "cycle") {
        g = cycle(n, std::vector<double>(static_cast<size_t>(n), b),
                  std::vector<double>(static_cast<size_t>(n), m));
    } else if (family == "star") {
        g = symmetric_star(q);
    } else if (family == "tree") {
        g = random_tree(n, seed);
    } else if (family == "balanced") {
        g = random_balanced(n, extra, seed);
    } else {
        throw ParseError("unknown family \"" + family + "\" (cycle, star, tree, balanced)");
    }
    emit(serialize_graph(g), c.out_path);
    return 0;
}

// ---------------------------------------------------------------- partition-check

int run_partition_check(const CommonOpts& c, const std::string& params_path,
                        const std::string& part_a_csv, const std::string& part_b_csv) {
    ParsedGraph pg = parse_graph(read_input(c.input));
    warn_all(pg.warnings);
    Partition p;
    bool have = false;
    if (!params_path.empty()) {
        CertifyParams cp = parse_params(read_input(params_path));
        if (cp.partition) {
            p = *cp.partition;
            have = true;
        }
    }
    if (!part_a_csv.empty() || !part_b_csv.empty()) {
        p.a = split_ids(part_a_csv);
        p.b = split_ids(part_b_csv);
        have = true;
    }
    if (!have)
        throw ParseError("partition-check needs --partition-a/--partition-b or --params");

    PartitionReport r = validate_partition(pg.graph, p);
    if (c.output == "json") {
        emit(partition_report_to_json(r).dump(2) + "\n", c.out_path);
    } else {
        std::ostringstream t;
        auto yn = [](bool b2) { return b2 ? "yes" : "no"; };
        t << "disjoint cover of V:        " << yn(r.disjoint_cover) << "\n"
          << "edges split by the sides:   " << yn(r.edges_split) << "\n"
          << "edge boundaries both match: " << yn(r.boundaries_match) << "\n"
          << "interior sizes:             " << r.interior_a << " and " << r.interior_b << "\n";
        if (!r.detail.empty()) t << "detail: " << r.detail << "\n";
        t << (r.all_pass() ? "PASS" : "FAIL") << "\n";
        emit(t.str(), c.out_path);
    }
    return r.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra: eigenvalue certificates for weighted directed graphs"};
    app.require_subcommand(1);

    CommonOpts c;
    std::string op_name = "S", mode_name = "raw", theorem, family;
    std::string params_path, subset_csv, core_csv, edge_csv, part_a_csv, part_b_csv;
    std::string matrix_out;
    bool allow_unbalanced = false;
    double tol = 1e-8, gen_b = 1.0, gen_m = 1.0;
    uint64_t seed = 0;
    int trials = 0, n = 8, q = 3, extra = 2;

    auto add_tol = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol,
                        "relative inequality tolerance, default 1e-8; identity checks use "
                        "min(1e-10, tol). SPECTRA_TOL overrides the default.")
            ->envname("SPECTRA_TOL");
    };

    CLI::App* v = app.add_subcommand("validate", "check a graph against the model assumptions");
    add_common(v, c);

    CLI::App* sp = app.add_subcommand("spectrum", "compute eigenvalues of Delta, DeltaStar, or S");
    add_common(sp, c);
    sp->add_option("--operator", op_name, "operator to assemble")
        ->check(CLI::IsMember({"Delta", "DeltaStar", "S"}));
    sp->add_option("--mode", mode_name, "raw measure m or normalized (m = out-degree)")
        ->check(CLI::IsMember({"raw", "normalized"}));
    sp->add_flag("--allow-unbalanced", allow_unbalanced,
                 "assemble S from symmetrized weights even if flow balance fails");
    sp->add_option("--matrix-out", matrix_out, "also write the operator matrix as JSON here");

    CLI::App* ce = app.add_subcommand("certify", "check one named eigenvalue statement");
    add_common(ce, c);
    ce->add_option("--theorem", theorem, "statement to certify (see README for the list)")
        ->required();
    ce->add_option("--mode", mode_name, "raw or normalized")
        ->check(CLI::IsMember({"raw", "normalized"}));
    add_tol(ce);
    ce->add_option("--seed", seed, "seed for the random probe functions (default 0)");
    ce->add_option("--trials", trials, "number of random probes for identity checks");
    ce->add_option("--params", params_path,
                   "JSON sidecar: {\"subset\":[],\"core\":[],\"edge_set\":[[from,to],..],"
                   "\"partition\":{\"a\":[],\"b\":[]},\"second\":{graph}}");
    ce->add_option("--subset", subset_csv, "comma-separated vertex ids (induced subgraph or "
                   "Dirichlet set)");
    ce->add_option("--core", core_csv, "comma-separated core vertex ids (flower statements)");
    ce->add_option("--edge-set", edge_csv, "comma-separated from:to pairs (edge bipartition)");
    ce->add_option("--partition-a", part_a_csv, "comma-separated vertex ids of side A");
    ce->add_option("--partition-b", part_b_csv, "comma-separated vertex ids of side B");

    CLI::App* ba = app.add_subcommand("batch", "fuzz one statement over random generated inputs");
    ba->add_option("--theorem", theorem, "statement to fuzz")->required();
    add_common(ba, c, /*with_input=*/false);
    ba->add_option("--mode", mode_name, "raw or normalized")
        ->check(CLI::IsMember({"raw", "normalized"}));
    add_tol(ba);
    ba->add_option("--seed", seed, "base seed; trial t uses a stream derived from (seed, t)");
    ba->add_option("--trials", trials, "number of random instances (default 100)");
    ba->add_option("--n", n, "target instance size (default 8)");

    CLI::App* ge = app.add_subcommand("generate", "emit a named graph family as graph JSON");
    ge->add_option("family", family, "cycle | star | tree | balanced")->required();
    add_common(ge, c, /*with_input=*/false);
    ge->add_option("--n", n, "vertex count (cycle, tree, balanced)");
    ge->add_option("--q", q, "leaf count (star)");
    ge->add_option("--seed", seed, "seed (tree, balanced)");
    ge->add_option("--extra", extra, "extra circulation cycles (balanced)");
    ge->add_option("--b", gen_b, "uniform edge weight (cycle)");
    ge->add_option("--m", gen_m, "uniform vertex measure (cycle)");

    CLI::App* pc = app.add_subcommand("partition-check",
                                      "report the splitting conditions for a vertex bipartition");
    add_common(pc, c);
    pc->add_option("--params", params_path, "JSON sidecar with {\"partition\":{\"a\":[],\"b\":[]}}");
    pc->add_option("--partition-a", part_a_csv, "comma-separated vertex ids of side A");
    pc->add_option("--partition-b", part_b_csv, "comma-separated vertex ids of side B");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*v) return run_validate(c);
        if (*sp) return run_spectrum(c, op_name, mode_name, allow_unbalanced, matrix_out);
        if (*ce)
            return run_certify(c, theorem, mode_name, tol, seed,
                               trials > 0 ? trials : CertifyOptions{}.probe_trials, params_path,
                               subset_csv, core_csv, edge_csv, part_a_csv, part_b_csv);
        if (*ba) return run_batch(c, theorem, mode_name, tol, seed,
                                  trials > 0 ? trials : BatchOptions{}.trials, n);
        if (*ge) return run_generate(c, family, n, q, seed, extra, gen_b, gen_m);
        if (*pc) return run_partition_check(c, params_path, part_a_csv, part_b_csv);
    } catch (const spectra::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const spectra::ConvergenceError& e) {
        std::cerr << "error: eigensolver did not converge: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
