#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "spectra/spectra.hpp"

using namespace spectra;

namespace {

// Minimal structural JSON-schema checker: enough of draft 2020-12 for the
// shipped report schema (type, required, properties, items, enum,
// exclusiveMinimum, $ref into $defs, top-level oneOf).
class SchemaChecker {
public:
    explicit SchemaChecker(json schema) : root_(std::move(schema)) {}

    bool matches(const json& value, const std::string& def) const {
        return check(root_["$defs"].at(def), value);
    }

    // oneOf at the top level: exactly one alternative matches
    int one_of_matches(const json& value) const {
        int hits = 0;
        for (const auto& alt : root_["oneOf"])
            if (check(alt, value)) ++hits;
        return hits;
    }

private:
    json root_;

    const json& resolve(const json& schema) const {
        if (schema.contains("$ref")) {
            std::string ref = schema["$ref"].get<std::string>();
            auto pos = ref.rfind('/');
            return root_["$defs"].at(ref.substr(pos + 1));
        }
        return schema;
    }

    static bool type_ok(const std::string& t, const json& v) {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "boolean") return v.is_boolean();
        if (t == "integer") return v.is_number_integer();
        if (t == "number") return v.is_number();
        return false;
    }

    bool check(const json& schema_in, const json& v) const {
        const json& schema = resolve(schema_in);
        if (schema.contains("type")) {
            const json& t = schema["type"];
            if (t.is_string()) {
                if (!type_ok(t.get<std::string>(), v)) return false;
            } else {
                bool any = false;
                for (const auto& alt : t)
                    if (type_ok(alt.get<std::string>(), v)) any = true;
                if (!any) return false;
            }
        }
        if (schema.contains("enum")) {
            bool any = false;
            for (const auto& e : schema["enum"])
                if (e == v) any = true;
            if (!any) return false;
        }
        if (schema.contains("exclusiveMinimum") && v.is_number()) {
            if (!(v.get<double>() > schema["exclusiveMinimum"].get<double>())) return false;
        }
        if (schema.contains("required")) {
            for (const auto& k : schema["required"])
                if (!v.contains(k.get<std::string>())) return false;
        }
        if (schema.contains("properties") && v.is_object()) {
            for (const auto& [k, sub] : schema["properties"].items())
                if (v.contains(k) && !check(sub, v.at(k))) return false;
        }
        if (schema.contains("items") && v.is_array()) {
            for (const auto& e : v)
                if (!check(schema["items"], e)) return false;
        }
        return true;
    }
};

SchemaChecker load_schema() {
    std::ifstream f(SPECTRA_SCHEMA_PATH);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return SchemaChecker(json::parse(ss.str()));
}

}  // namespace

TEST_CASE("round trip parse(serialize(g)) preserves graphs exactly") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        auto g = random_balanced(3 + static_cast<int>(seed % 9), seed % 4, seed);
        auto pg = parse_graph(serialize_graph(g));
        CHECK(pg.graph == g);
        CHECK(pg.warnings.empty());
    }
    for (auto g : {cycle(2), cycle(7), symmetric_star(5), random_tree(10, 4)}) {
        CHECK(parse_graph(serialize_graph(g)).graph == g);
    }
}

TEST_CASE("defaults apply when m and b are omitted") {
    auto pg = parse_graph(R"({"vertices":[{"id":"a"},{"id":"b"}],
                             "edges":[{"from":"a","to":"b"},{"from":"b","to":"a"}]})");
    CHECK(pg.graph.measure_of("a") == 1.0);
    CHECK(pg.graph.measure_of("b") == 1.0);
    CHECK(pg.graph.weight("a", "b") == 1.0);
    CHECK(validate(pg.graph).all_pass());
}

TEST_CASE("integer ids become their decimal spellings") {
    auto pg = parse_graph(R"({"vertices":[0,1],"edges":[{"from":0,"to":1,"b":2.5},
                                                        {"from":1,"to":0,"b":2.5}]})");
    CHECK(pg.graph.weight("0", "1") == 2.5);
}

TEST_CASE("duplicate edges merge by summation with a warning") {
    auto pg = parse_graph(R"({"vertices":["a","b"],
        "edges":[{"from":"a","to":"b","b":1},{"from":"a","to":"b","b":2}]})");
    CHECK(pg.graph.weight("a", "b") == 3.0);
    REQUIRE(pg.warnings.size() == 1);
    CHECK(pg.warnings[0].find("(\"a\" -> \"b\")") != std::string::npos);
    CHECK(pg.graph.merged_parallel_edges());
}

TEST_CASE("parse errors name the offending entry") {
    auto expect_error = [](const char* text, const char* needle) {
        try {
            parse_graph(text);
            FAIL("expected an error for " << text);
        } catch (const ParseError& e) {
            CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(needle));
        }
    };
    expect_error(R"({"vertices":["a","b"],"edges":[{"from":"a","to":"b","b":-1}]})",
                 "must be positive");
    expect_error(R"({"vertices":["a","b"],"edges":[{"from":"a","to":"b","b":0}]})",
                 "must be positive");
    expect_error(R"({"vertices":[{"id":"a","m":-2}]})", "\"a\"");
    expect_error(R"({"vertices":["a"],"edges":[{"from":"a","to":"a"}]})", "self-loop");
    expect_error(R"({"vertices":["a"],"edges":[{"from":"a","to":"x"}]})", "unknown vertex");
    expect_error(R"({"vertices":["a","a"]})", "declared twice");
    expect_error(R"({"vertices":[]})", "empty");
    expect_error(R"({"edges":[]})", "vertices");
    expect_error(R"([])", "object");
    expect_error(R"({"vertices":[{"id":"a","m":"big"}]})", "number");
}

TEST_CASE("syntax errors carry the parser position") {
    try {
        parse_graph("{\"vertices\":[\n  broken");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("line 2"));
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("column"));
    }
}

TEST_CASE("params sidecar parsing") {
    auto p = parse_params(R"({
        "subset":["a","b"],
        "edge_set":[["a","b"],{"from":"b","to":"c"}],
        "partition":{"a":[0,1],"b":[2]},
        "second":{"vertices":["x","y"],"edges":[{"from":"x","to":"y"},{"from":"y","to":"x"}]}
    })");
    REQUIRE(p.subset.has_value());
    CHECK(p.subset->count("a") == 1);
    REQUIRE(p.edge_set.has_value());
    CHECK((*p.edge_set)[1] == std::pair<VertexId, VertexId>{"b", "c"});
    REQUIRE(p.partition.has_value());
    CHECK(p.partition->a == std::set<VertexId>{"0", "1"});
    REQUIRE(p.second.has_value());
    CHECK(p.second->size() == 2);

    CHECK_THROWS_AS(parse_params(R"({"partition":{"a":[]}})"), ParseError);
    CHECK_THROWS_AS(parse_params(R"({"edge_set":[["a"]]})"), ParseError);
    CHECK_THROWS_AS(parse_params(R"(42)"), ParseError);
}

TEST_CASE("reports validate against the shipped schema") {
    auto schema = load_schema();
    auto g = random_balanced(6, 2, 3);

    SECTION("graph") {
        json j = graph_to_json(g);
        CHECK(schema.matches(j, "graph"));
        CHECK(schema.one_of_matches(j) == 1);
    }
    SECTION("validation") {
        json j = validation_to_json(validate(g));
        j["n"] = g.size();
        j["edge_count"] = g.edge_count();
        CHECK(schema.matches(j, "validation"));
        CHECK(schema.one_of_matches(j) == 1);
    }
    SECTION("spectrum") {
        auto op = laplacian(g, Mode::raw);
        auto s = eig_general(op);
        json j = spectrum_report_json(op, "raw", s.eigenvalues, s.residual);
        CHECK(schema.matches(j, "spectrum"));
        CHECK(schema.one_of_matches(j) == 1);
    }
    SECTION("certificate") {
        auto cert = certify(TheoremId::realpart_lemma, TheoremInput{g, {}, {}, {}, {}},
                            CertifyOptions{});
        json j = certificate_to_json(cert);
        CHECK(schema.matches(j, "certificate"));
        CHECK(schema.one_of_matches(j) == 1);
    }
    SECTION("batch") {
        BatchOptions bo;
        bo.trials = 10;
        json j = batch_result_to_json(batch_certify(TheoremId::positivity_s, bo));
        j["seed"] = 1;
        j["n"] = 8;
        CHECK(schema.matches(j, "batch"));
        CHECK(schema.one_of_matches(j) == 1);
    }
    SECTION("partition report") {
        json j = partition_report_to_json(
            validate_partition(cycle(6), {{"0", "1", "2"}, {"3", "4", "5"}}));
        CHECK(schema.matches(j, "partition_report"));
        CHECK(schema.one_of_matches(j) == 1);
    }
    SECTION("operator matrix") {
        json j = operator_to_json(special_laplacian(g, Mode::raw));
        CHECK(schema.matches(j, "operator_matrix"));
        CHECK(schema.one_of_matches(j) == 1);
    }
    SECTION("schema rejects a malformed certificate") {
        json bad{{"theorem", "EDGE_WEYL"}, {"pass", "yes"}};  // wrong type, missing keys
        CHECK_FALSE(schema.matches(bad, "certificate"));
    }
}

TEST_CASE("eigenvalue json uses re and im keys with full precision") {
    std::vector<std::complex<double>> w{{0.1234567890123456, -2.0}};
    json j = eigenvalues_to_json(w);
    CHECK(j[0]["re"].get<double>() == 0.1234567890123456);
    CHECK(j[0]["im"].get<double>() == -2.0);
    json r = eigenvalues_to_json(std::vector<double>{1.5});
    CHECK(r[0]["im"].get<double>() == 0.0);
}

TEST_CASE("certificate json carries the contract fields") {
    auto cert = certify(TheoremId::cycle_spectrum, TheoremInput{cycle(4), {}, {}, {}, {}},
                        CertifyOptions{});
    json j = certificate_to_json(cert);
    CHECK(j["theorem"] == "CYCLE_SPECTRUM");
    CHECK(j["pass"].is_boolean());
    CHECK(j["tolerance"].is_number());
    CHECK(j["input_digest"].is_string());
    REQUIRE(j["checks"].is_array());
    REQUIRE(!j["checks"].empty());
    for (const char* k : {"desc", "lhs", "rhs", "margin"}) CHECK(j["checks"][0].contains(k));
}
