#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "laf/cli.hpp"
#include "laf/io.hpp"

using namespace laf;

namespace {

std::string fx(const std::string& name) {
    return std::string(LAF_FIXTURE_DIR) + "/" + name;
}

RunConfig cfg(const std::string& cmd, const std::string& input = "",
              const std::string& chars = "") {
    RunConfig c;
    c.command = cmd;
    c.input_path = input;
    c.char_path = chars;
    return c;
}

/// run() wrapped so exceptions map to the CLI exit codes without touching
/// the process streams.
int exit_code_of(const RunConfig& c) {
    try {
        return run(c).exit_code;
    } catch (const input_error&) {
        return 1;
    } catch (const compute_error&) {
        return 2;
    } catch (const std::exception&) {
        return 1;
    }
}

} // namespace

TEST_CASE("disc command") {
    auto out = run(cfg("disc", fx("quadratic.json")));
    CHECK(out.exit_code == 0);
    CHECK(out.report["results"]["discriminant"] == "t");
    CHECK(out.report["command"] == "disc");
    CHECK(out.report["version"] == kVersion);
    // digest present and stable
    auto d1 = out.report["input_digest"][fx("quadratic.json")].get<std::string>();
    auto d2 = fnv1a_hex(read_file(fx("quadratic.json")));
    CHECK(d1 == d2);
}

TEST_CASE("fiber command") {
    auto c = cfg("fiber", fx("quadratic.json"), fx("char_t1.json"));
    auto out = run(c);
    CHECK(out.exit_code == 0);
    const auto& rep = out.report["results"]["report"];
    CHECK(rep["radical_dim"] == 0);
    CHECK(rep["blocks"] == json::array({1, 1}));
    CHECK(rep["in_X0"] == true);
    CHECK(rep["discriminant_value"] == "1");
    CHECK(rep["mode"] == "exact");

    // deterministic: identical dumps for identical configs
    auto again = run(c);
    CHECK(out.report.dump() == again.report.dump());

    // float-mode character round-trips through the same pipeline
    auto outf = run(cfg("fiber", fx("quadratic.json"), fx("char_float.json")));
    CHECK(outf.report["results"]["report"]["mode"] == "float");
}

TEST_CASE("stratify command") {
    auto c = cfg("stratify", fx("quadratic.json"), fx("chars_scan.json"));
    auto out = run(c);
    CHECK(out.exit_code == 0);
    const auto& ideals = out.report["results"]["ideals"];
    REQUIRE(ideals.size() == 2);
    CHECK(ideals[0]["generators"] == json::array({"t"}));
    CHECK(ideals[1]["generators"] == json::array({"1"}));
    const auto& strata = out.report["results"]["strata"];
    REQUIRE(strata.size() == 3);
    CHECK(strata[0]["stratum_index"] == 0);
    CHECK(strata[2]["stratum_index"] == 1);

    // tiny minor budget is refused, not crashed
    auto small = cfg("stratify", fx("quadratic.json"));
    small.max_minors = 0;
    auto out2 = run(small);
    CHECK(out2.exit_code == 0);
    CHECK(out2.report["results"]["ideals"][0].contains("refused"));
}

TEST_CASE("hecke command") {
    auto c = cfg("hecke");
    c.preset = "gl2";
    c.compare = true;
    c.char_path = fx("char_gl2_132.json");
    auto out = run(c);
    CHECK(out.exit_code == 0);
    CHECK(out.report["results"]["compare"]["equal"] == true);
    CHECK(out.report["results"]["irreducibility"]["verdict"] == "irreducible");
    CHECK(out.report["results"]["irreducibility"]["discriminant_value"] == "25");

    c.char_path = fx("char_gl2_122.json");
    auto out2 = run(c);
    CHECK(out2.report["results"]["irreducibility"]["verdict"] == "reducible");
}

TEST_CASE("tower command") {
    auto out = run(cfg("tower", fx("tower_quadratic.json")));
    CHECK(out.exit_code == 0);
    CHECK(out.report["results"]["discriminant_identity"] == true);
    CHECK(out.report["results"]["norm_transitivity"] == true);
    CHECK(out.report["results"]["norm_scalar_extension"] == true);
}

TEST_CASE("error paths: every malformed fixture is rejected cleanly") {
    CHECK(exit_code_of(cfg("disc", fx("bad_json.json"))) == 1);
    CHECK(exit_code_of(cfg("disc", fx("bad_poly.json"))) == 1);
    CHECK(exit_code_of(cfg("disc", fx("bad_assoc.json"))) == 1);
    CHECK(exit_code_of(cfg("disc", fx("bad_zero_unit.json"))) == 1);
    CHECK(exit_code_of(cfg("disc", fx("nonexistent.json"))) == 1);
    // laurent variable set to zero
    CHECK(exit_code_of(cfg("fiber", fx("laurent_quadratic.json"), fx("char_t0.json"))) == 1);
    // character missing the base variable
    CHECK(exit_code_of(cfg("fiber", fx("quadratic.json"), fx("char_missing.json"))) == 1);
    // missing --char
    CHECK(exit_code_of(cfg("fiber", fx("quadratic.json"))) == 1);
    // unknown command / preset
    CHECK(exit_code_of(cfg("frobnicate")) == 1);
    auto h = cfg("hecke");
    h.preset = "e8";
    CHECK(exit_code_of(h) == 1);
}

TEST_CASE("computation failures map to exit 2") {
    // near-zero-locus float fiber: discriminant and radical rank disagree
    CHECK(exit_code_of(cfg("fiber", fx("scaled_quadratic.json"), fx("char_near_zero.json"))) == 2);
}

TEST_CASE("parse positions reach the CLI surface") {
    try {
        run(cfg("disc", fx("bad_poly.json")));
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("negative exponent") != std::string::npos);
    }
}

TEST_CASE("report writing honors --out") {
    auto c = cfg("disc", fx("quadratic.json"));
    auto tmp = std::filesystem::temp_directory_path() / "laf_test_report.json";
    c.out_path = tmp.string();
    CHECK(run_cli(c) == 0);
    auto parsed = load_json_file(tmp.string());
    CHECK(parsed["results"]["discriminant"] == "t");
    std::filesystem::remove(tmp);
}
