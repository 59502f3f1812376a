#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "eqc/runspec.hpp"

using namespace eqc;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string example_spec(const std::string& name) {
    return slurp(std::string(TESTS_DIR) + "/../docs/examples/" + name + ".json");
}

std::string golden_report(const std::string& name) {
    return slurp(std::string(TESTS_DIR) + "/golden/" + name + ".report.json");
}

}  // namespace

TEST_CASE("worked examples match frozen reports") {
    for (const std::string name : {"p2_s3", "delpezzo_swap", "klein_point"}) {
        CAPTURE(name);
        RunOutcome out = run_spec_json(example_spec(name));
        CHECK(out.input_ok);
        CHECK(out.verify_ok);
        CHECK(out.report_json == golden_report(name));
        CHECK(out.report_text.find("result: pass") != std::string::npos);
    }
}

TEST_CASE("reports are deterministic") {
    const std::string spec = example_spec("p2_s3");
    RunOutcome a = run_spec_json(spec);
    RunOutcome b = run_spec_json(spec);
    CHECK(a.report_json == b.report_json);
    CHECK(a.report_text == b.report_text);
}

TEST_CASE("input rejection") {
    SUBCASE("malformed json") {
        RunOutcome out = run_spec_json("{ not json");
        CHECK_FALSE(out.input_ok);
        CHECK(out.error.find("not valid JSON") != std::string::npos);
    }
    SUBCASE("wrong schema version") {
        RunOutcome out = run_spec_json(R"({"schema": 2, "catalog": {"id": "quadric", "n": 5}})");
        CHECK_FALSE(out.input_ok);
    }
    SUBCASE("missing catalog") {
        RunOutcome out = run_spec_json(R"({"schema": 1})");
        CHECK_FALSE(out.input_ok);
    }
    SUBCASE("unknown catalog id") {
        RunOutcome out = run_spec_json(R"({"schema": 1, "catalog": {"id": "elliptic"}})");
        CHECK_FALSE(out.input_ok);
        CHECK_FALSE(out.error.empty());
    }
    SUBCASE("permutation character needs generators") {
        json spec = json::parse(example_spec("p2_s3"));
        spec["group"] = {{"table", {{0, 1}, {1, 0}}}};
        RunOutcome out = run_spec_json(spec.dump());
        CHECK_FALSE(out.input_ok);
        CHECK(out.error.find("generator") != std::string::npos);
    }
    SUBCASE("cocycle condition enforced") {
        json spec = json::parse(example_spec("klein_point"));
        spec["extension"]["cocycle"][1][1] = 1;
        RunOutcome out = run_spec_json(spec.dump());
        CHECK_FALSE(out.input_ok);
    }
}

TEST_CASE("verification failure is not an input error") {
    // Swapping the two exceptional curves without the matching lattice
    // involution parses fine but fails the action check.
    json spec = json::parse(example_spec("delpezzo_swap"));
    spec["action"].erase("lattice_maps");
    RunOutcome out = run_spec_json(spec.dump());
    CHECK(out.input_ok);
    CHECK_FALSE(out.verify_ok);

    json report = json::parse(out.report_json);
    CHECK(report["ok"] == false);
    CHECK(report["action"]["kclasses_compatible"] == false);
    CHECK(report["checks"]["action"] == false);
    CHECK(report["equivariant"].is_null());
    CHECK(out.report_text.find("result: FAIL") != std::string::npos);
}

TEST_CASE("catalog shortcuts") {
    SUBCASE("trivial group line bundle homs") {
        RunOutcome out = run_catalog_shortcut("projective:4");
        REQUIRE(out.input_ok);
        CHECK(out.verify_ok);
        json report = json::parse(out.report_json);
        const json& grid = report["equivariant"]["hom_grid"];
        REQUIRE(grid.size() == 4);
        // dim Hom(O(p), O(q)) = C(q - p + 3, 3).
        CHECK(grid[0][0] == 1);
        CHECK(grid[0][1] == 4);
        CHECK(grid[0][2] == 10);
        CHECK(grid[0][3] == 20);
        CHECK(grid[1][3] == 10);
        CHECK(grid[3][0] == 0);
        CHECK(report["group"].is_null());
    }
    SUBCASE("quadric and grassmannian run clean") {
        CHECK(run_catalog_shortcut("quadric:6").verify_ok);
        CHECK(run_catalog_shortcut("grassmannian:2,4").verify_ok);
        CHECK(run_catalog_shortcut("delpezzo:kn4").verify_ok);
    }
    SUBCASE("parse errors") {
        CHECK_FALSE(run_catalog_shortcut("projective").input_ok);
        CHECK_FALSE(run_catalog_shortcut("projective:").input_ok);
        CHECK_FALSE(run_catalog_shortcut("projective:x").input_ok);
        CHECK_FALSE(run_catalog_shortcut("grassmannian:2").input_ok);
        CHECK_FALSE(run_catalog_shortcut("mystery:1").input_ok);
    }
}
