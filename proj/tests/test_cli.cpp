#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmact/cli.hpp"
#include "gmact/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace gmact;
using namespace gmact::cli;

static const std::string kFixtures = GMACT_FIXTURES_DIR;

static std::tuple<int, std::string, std::string> invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST_CASE("spec loading") {
    SUBCASE("minimal valid spec") {
        auto spec = parse_spec_text(R"({"variables":[{"name":"x","weight":1}]})");
        CHECK(spec.algebra.ring->nvars() == 1);
        CHECK(spec.algebra.relations.empty());
        CHECK(!spec.point.has_value());
    }
    SUBCASE("non-homogeneous relation is rejected with witness terms") {
        try {
            parse_spec_text(R"({"variables":[{"name":"x","weight":1},{"name":"y","weight":2}],
                                "relations":["x + y"]})");
            FAIL("expected input_error");
        } catch (const input_error& e) {
            std::string msg = e.what();
            CHECK(msg.find("x") != std::string::npos);
            CHECK(msg.find("y") != std::string::npos);
        }
    }
    SUBCASE("duplicate variable is rejected") {
        CHECK_THROWS_AS(
            parse_spec_text(R"({"variables":[{"name":"x","weight":1},{"name":"x","weight":2}]})"),
            input_error);
    }
    SUBCASE("unknown variable in a relation is rejected") {
        CHECK_THROWS_AS(
            parse_spec_text(R"({"variables":[{"name":"x","weight":1}],"relations":["x*q"]})"),
            input_error);
    }
    SUBCASE("points parse exact rationals") {
        auto spec = parse_spec_text(
            R"({"variables":[{"name":"x","weight":0}],"point":{"x":"-3/6"}})");
        REQUIRE(spec.point.has_value());
        CHECK(spec.point->at("x") == Rational(-1, 2));
    }
}

TEST_CASE("subcommand outputs") {
    SUBCASE("fixed on the cross gives the one-point presentation") {
        auto [code, out, err] = invoke({"fixed", "--file", kFixtures + "/cross.json"});
        CHECK(code == 0);
        CHECK(out.find("A0: Q[]") != std::string::npos);
    }
    SUBCASE("fiber at zero of a positive weight line") {
        auto [code, out, err] = invoke(
            {"fiber", "--t", "0", "--file", kFixtures + "/line_weight1.json", "--json"});
        CHECK(code == 0);
        auto j = nlohmann::json::parse(out);
        CHECK(j["ok"] == true);
        CHECK(j["results"]["fiber_relations"] == "(0)");
    }
    SUBCASE("closure comparison reports the witness on the singular hypersurface") {
        auto [code, out, err] = invoke(
            {"closure", "--compare", "--file", kFixtures + "/hypersurface4.json", "--json"});
        CHECK(code == 0);
        auto j = nlohmann::json::parse(out);
        CHECK(j["results"]["equal"] == "no");
        CHECK(j["results"]["witness"] == "u_x1*v_y1 + u_x2*v_y2");
    }
    SUBCASE("torsion of the cross") {
        auto [code, out, err] = invoke({"torsion", "--file", kFixtures + "/cross.json", "--json"});
        CHECK(code == 0);
        auto j = nlohmann::json::parse(out);
        CHECK(j["results"]["torsion_generators"] == "(x*y)");
        CHECK(j["results"]["flat_over_line"] == "no");
    }
    SUBCASE("tangent takes the point from the spec or the flag") {
        auto [code, out, err] =
            invoke({"tangent", "--file", kFixtures + "/cross.json", "--json"});
        CHECK(code == 0);
        auto j = nlohmann::json::parse(out);
        CHECK(j["results"]["dims_by_weight"] == "{-1:1, 1:1}");
        auto [code2, out2, err2] = invoke({"tangent", "--file", kFixtures + "/cross.json",
                                           "--point", "x=0,y=0"});
        CHECK(code2 == 0);
    }
    SUBCASE("charts and cat subcommands") {
        CHECK(std::get<0>(invoke({"charts", "xn", "--n", "3"})) == 0);
        CHECK(std::get<0>(invoke({"charts", "blowup"})) == 0);
        CHECK(std::get<0>(invoke({"cat", "pm", "--file", kFixtures + "/cat/monoid_10.json"})) == 0);
        CHECK(std::get<0>(invoke({"cat", "tw", "--file", kFixtures + "/cat/bz2.json"})) == 0);
        CHECK(std::get<0>(invoke({"cat", "lax", "--file", kFixtures + "/cat/lax_trivial.json"})) ==
              0);
    }
}

TEST_CASE("verify passes on the bundled corpus") {
    size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json")
            continue;
        ++count;
        auto [code, out, err] = invoke({"verify", "--file", entry.path().string()});
        INFO(entry.path().string(), "\n", out, err);
        CHECK(code == 0);
    }
    CHECK(count >= 10);
}

TEST_CASE("negative controls exit with the input-error code") {
    for (const auto& entry : std::filesystem::directory_iterator(kFixtures + "/bad")) {
        auto [code, out, err] = invoke({"verify", "--file", entry.path().string()});
        INFO(entry.path().string(), " -> ", err);
        CHECK(code == 2);
        CHECK(!err.empty());
    }
    auto [code, out, err] = invoke({"verify", "--file", kFixtures + "/does_not_exist.json"});
    CHECK(code == 2);
}

TEST_CASE("contradictory input fails as a check, not as a parse error") {
    // a smoothness claim on a singular algebra parses fine but the closure
    // and torsion checks refute it: exit code 1
    auto [code, out, err] = invoke(
        {"verify", "--file", kFixtures + "/contradictory/smooth_claim_on_singular.json"});
    CHECK(code == 1);
    CHECK(out.find("[fail]") != std::string::npos);
}

TEST_CASE("resource cap exits with its own code") {
    setenv("GM_GB_BUDGET", "1", 1);
    auto [code, out, err] = invoke({"verify", "--file", kFixtures + "/hypersurface4.json"});
    unsetenv("GM_GB_BUDGET");
    CHECK(code == 3);
    CHECK(err.find("resource") != std::string::npos);
}

TEST_CASE("machine-readable reports are byte-identical across runs") {
    auto strip_timings = [](const std::string& text) {
        auto j = nlohmann::json::parse(text);
        j.erase("timings_ms");
        return j.dump(2);
    };
    for (const char* name : {"cross.json", "hypersurface4.json", "cusp_positive.json"}) {
        auto [c1, out1, e1] = invoke({"verify", "--file", kFixtures + "/" + name, "--json"});
        auto [c2, out2, e2] = invoke({"verify", "--file", kFixtures + "/" + name, "--json"});
        CHECK(c1 == 0);
        CHECK(c2 == 0);
        CHECK(strip_timings(out1) == strip_timings(out2));
    }
}

TEST_CASE("projective line demo") {
    auto report = demo_p1();
    CHECK(report.all_passed());
    bool found_shape = false;
    for (const auto& [k, v] : report.results)
        if (k == "attractor_shape")
            found_shape = true;
    CHECK(found_shape);

    auto [code, out, err] = invoke({"demo", "p1"});
    CHECK(code == 0);
    CHECK(out.find("chart1_attractor_is_whole_chart") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    auto [code, out, err] = invoke({"--help"});
    CHECK(code == 0);
    CHECK(out.find("attractor") != std::string::npos);
}
