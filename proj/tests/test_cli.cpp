#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "hspace/report.hpp"
#include "hspace/solution.hpp"
#include "hspace/verify.hpp"

using namespace hspace;
using nlohmann::json;

namespace {

json minimal_t51() {
    return json::parse(R"({
        "type": "T51",
        "eps": 1,
        "signs": {"e5": -1, "e6": 1},
        "theta": {"kind": "polynomial", "coeffs": [0.0, 0.0, 0.1]},
        "f": {"6": {"kind": "polynomial", "coeffs": [4.0, 3.0]}}
    })");
}

}  // namespace

TEST_CASE("minimal config gets the documented defaults") {
    const RunConfig cfg = parse_config(minimal_t51());
    CHECK(cfg.sampler.count == 100);
    CHECK(cfg.sampler.seed == 1);
    CHECK(cfg.sampler.margin == doctest::Approx(0.1));
    for (int i = 0; i < kDim; ++i) {
        CHECK(cfg.sampler.box[i][0] == 1.0);
        CHECK(cfg.sampler.box[i][1] == 2.0);
    }
    CHECK(cfg.a1 == 1.0);
    CHECK(cfg.suites == kSuiteNames);
    CHECK(cfg.spec.type == HSpaceType::T51);
}

TEST_CASE("schema violations name the offending field") {
    {
        json j = minimal_t51();
        j["type"] = "T42";
        try {
            parse_config(j);
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.field == "type");
        }
    }
    {
        // a missing with eps_tilde = 0 fails spec validation
        json j = minimal_t51();
        j["type"] = "T2211";
        j["eps"] = 1;
        j["eps_tilde"] = 0;
        j["signs"] = {{"e2", 1}, {"e4", 1}, {"e5", -1}, {"e6", 1}};
        j["omega"] = {{"kind", "constant"}, {"value", 1.0}};
        j["f"]["5"] = {{"kind", "polynomial"}, {"coeffs", {3.0, 1.0}}};
        try {
            parse_config(j);
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.field == "a");
        }
    }
    {
        json j = minimal_t51();
        j["suites"] = json::array();
        CHECK_THROWS_AS(parse_config(j), ValidationError);
    }
    {
        json j = minimal_t51();
        j["suites"] = {"eisenhart", "nonsense"};
        try {
            parse_config(j);
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.field == "suites");
        }
    }
    {
        json j = minimal_t51();
        j["tolerances"] = {{"eisenhart", -1.0}};
        CHECK_THROWS_AS(parse_config(j), ValidationError);
    }
}

TEST_CASE("reports are canonical bytes and round-trip exactly") {
    json j = minimal_t51();
    j["suites"] = {"eisenhart", "vanishing"};
    j["sampler"] = {{"count", 12}, {"seed", 3}};
    RunConfig cfg = parse_config(j);

    const RunReport rep1 = run_verify(cfg);
    const RunReport rep2 = run_verify(cfg);
    const std::string b1 = emit_report(rep1, "json", false);
    const std::string b2 = emit_report(rep2, "json", false);
    CHECK(b1 == b2);

    // parse(emit(r)) reproduces every residual bit-exactly
    const json parsed = json::parse(b1);
    for (const auto& s : rep1.suites) {
        CHECK(parsed["suites"][s.name]["worst"].get<double>() == s.worst);
        CHECK(parsed["suites"][s.name]["pass"].get<bool>() == s.pass);
        for (const auto& [k, v] : s.details)
            CHECK(parsed["suites"][s.name]["details"][k].get<double>() == v);
    }
    CHECK(parsed["pass"].get<bool>() == rep1.all_pass);
    CHECK(parsed["calibration"]["riemann_sign"].get<double>() == kRiemannSign);

    // one PASS/FAIL line per selected suite in the text format
    const std::string text = emit_report(rep1, "text", true);
    for (const auto& s : rep1.suites) {
        const std::string line = "suite " + s.name;
        CHECK(text.find(line) != std::string::npos);
    }
    CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("suite outcomes drive the overall verdict") {
    json j = minimal_t51();
    j["sampler"] = {{"count", 10}, {"seed", 5}};
    j["suites"] = {"eisenhart", "integrability", "vanishing", "proof_ids"};
    const RunConfig cfg = parse_config(j);
    const RunReport rep = run_verify(cfg);
    CHECK(rep.all_pass);
    for (const auto& s : rep.suites) {
        INFO(s.name);
        CHECK(s.pass);
        CHECK(s.errors.empty());
    }

    // an impossible tolerance override fails the suite and the run
    json jf = j;
    jf["tolerances"] = {{"eisenhart", 1e-30}};
    const RunReport bad = run_verify(parse_config(jf));
    CHECK(!bad.all_pass);
}

TEST_CASE("verify runs the shipped fixture end to end") {
    RunConfig cfg = load_config(std::string(HSPACE_FIXTURES_DIR) + "/t33_generic.json");
    cfg.sampler.count = 20;
    cfg.echo["sampler"]["count"] = 20;
    const RunReport rep = run_verify(cfg);
    CHECK(rep.all_pass);
    CHECK(rep.calibration.t321_g66 == "cross_block");
    CHECK(rep.calibration.t411_tail == "outside_doubled");
    CHECK(rep.calibration.t33_atilde == "mirror");
}

TEST_CASE("sampling exhaustion propagates") {
    json j = minimal_t51();
    j["sampler"] = {{"count", 5}, {"seed", 1}, {"margin", 1e9}};
    CHECK_THROWS_AS(run_verify(parse_config(j)), SamplingError);
}

TEST_CASE("config file loading") {
    CHECK_THROWS_AS(load_config("/nonexistent/x.json"), ValidationError);
    const RunConfig cfg = load_config(std::string(HSPACE_FIXTURES_DIR) + "/t51_generic.json");
    CHECK(cfg.spec.type == HSpaceType::T51);
    CHECK(cfg.spec.f_simple.count(5) == 1);
}
