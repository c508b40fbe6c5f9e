#include "laf/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "laf/hecke.hpp"
#include "laf/io.hpp"
#include "laf/selftest.hpp"

namespace laf {

namespace {

json envelope(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["seed"] = cfg.seed;
    j["version"] = kVersion;
    json digests = json::object();
    for (const std::string& p : {cfg.input_path, cfg.char_path})
        if (!p.empty()) digests[p] = fnv1a_hex(read_file(p));
    j["input_digest"] = digests;
    return j;
}

Character load_character(const RunConfig& cfg) {
    if (cfg.char_path.empty()) throw input_error("this command requires --char <char.json>");
    Character chi = character_from_json(load_json_file(cfg.char_path));
    if (cfg.tol_override) chi.tolerance = *cfg.tol_override;
    return chi;
}

json run_disc(const RunConfig& cfg) {
    auto alg = algebra_from_json(load_json_file(cfg.input_path));
    json r;
    r["ring"] = ring_to_json(*alg->base);
    r["rank"] = alg->rank;
    r["discriminant"] = format_poly(discriminant(*alg));
    return r;
}

json run_stratify(const RunConfig& cfg) {
    auto alg = algebra_from_json(load_json_file(cfg.input_path));
    json r;
    json ideals = json::array();
    for (std::size_t i = 1; i <= alg->rank; ++i) {
        json entry;
        entry["i"] = i;
        try {
            json gens = json::array();
            for (const auto& g : determinantal_ideal(*alg, i, cfg.max_minors))
                gens.push_back(format_poly(g));
            entry["generators"] = gens;
        } catch (const compute_error& e) {
            entry["refused"] = e.what();
        }
        ideals.push_back(entry);
    }
    r["ideals"] = ideals;

    if (!cfg.char_path.empty()) {
        auto chars = characters_from_json(load_json_file(cfg.char_path));
        for (auto& chi : chars)
            if (cfg.tol_override) chi.tolerance = *cfg.tol_override;
        json strata = json::array();
        for (const auto& e : stratum_scan(*alg, chars)) {
            json se;
            se["character"] = character_to_json(e.chi);
            if (e.index)
                se["stratum_index"] = *e.index;
            else
                se["error"] = e.error;
            strata.push_back(se);
        }
        r["strata"] = strata;
    }
    return r;
}

json run_fiber(const RunConfig& cfg) {
    auto alg = algebra_from_json(load_json_file(cfg.input_path));
    Character chi = load_character(cfg);
    json r;
    r["report"] = fiber_report_to_json(fiber(*alg, chi, cfg.seed));
    return r;
}

json run_hecke(const RunConfig& cfg, int& exit_code) {
    if (cfg.preset.empty()) throw input_error("hecke requires --preset gl2|sl2|pgl2");
    auto rd = make_rank1_datum(cfg.preset);
    // inputs parse before any computation starts
    std::optional<Character> chi;
    if (!cfg.char_path.empty()) chi = load_character(cfg);

    json r;
    r["preset"] = cfg.preset;
    r["discriminant"] = format_poly(hecke_discriminant(rd));
    if (cfg.compare) {
        auto cmp = compare_closed_form(rd);
        json c;
        c["equal"] = cmp.equal;
        c["computed"] = format_poly(cmp.computed);
        c["expected"] = format_poly(cmp.expected);
        r["compare"] = c;
        if (!cmp.equal) exit_code = 2;
    }
    if (chi) {
        auto res = principal_series_irreducible(rd, *chi, cfg.seed);
        json v;
        v["verdict"] = to_string(res.verdict);
        v["discriminant_value"] = res.discriminant_value.str();
        if (!res.detail.empty()) v["detail"] = res.detail;
        if (res.have_fiber) v["fiber"] = fiber_report_to_json(res.fiber);
        r["irreducibility"] = v;
    }
    return r;
}

json run_tower(const RunConfig& cfg, int& exit_code) {
    Tower t = tower_from_json(load_json_file(cfg.input_path));
    json r;
    bool disc_ok = check_discriminant_tower(t);
    r["discriminant_identity"] = disc_ok;

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto rand_b = [&] {
        BElem b;
        for (std::size_t i = 0; i < t.B->rank; ++i)
            b.push_back(Poly::constant(t.B->base, Rational(coeff(rng))) +
                        Poly::variable(t.B->base, t.B->base->vars[0]) *
                            Poly::constant(t.B->base, Rational(coeff(rng))));
        return b;
    };
    bool norm_ok = true;
    for (std::size_t j = 0; j < t.rank_c; ++j) {
        CElem u;
        u.coords.assign(t.rank_c, BElem(t.B->rank, Poly(t.B->base)));
        u.coords[j][0] = Poly::constant(t.B->base, Rational(1));
        norm_ok = norm_ok && check_norm_transitivity(t, u);
    }
    for (int rep = 0; rep < 5; ++rep) {
        CElem u;
        for (std::size_t j = 0; j < t.rank_c; ++j) u.coords.push_back(rand_b());
        norm_ok = norm_ok && check_norm_transitivity(t, u);
    }
    r["norm_transitivity"] = norm_ok;

    bool scal_ok = true;
    for (int rep = 0; rep < 5; ++rep) scal_ok = scal_ok && check_norm_scalar_extension(t, rand_b());
    r["norm_scalar_extension"] = scal_ok;

    if (!(disc_ok && norm_ok && scal_ok)) exit_code = 2;
    return r;
}

json run_selftest(const RunConfig& cfg, int& exit_code) {
    auto results = run_acceptance(cfg.seed);
    bool all = true;
    for (const auto& c : results) all = all && c.pass;
    json r;
    r["criteria"] = criteria_to_json(results);
    r["all_pass"] = all;
    if (!all) exit_code = 2;
    return r;
}

} // namespace

RunOutcome run(const RunConfig& cfg) {
    RunOutcome out;
    out.report = envelope(cfg);
    int code = 0;
    if (cfg.command == "disc")
        out.report["results"] = run_disc(cfg);
    else if (cfg.command == "stratify")
        out.report["results"] = run_stratify(cfg);
    else if (cfg.command == "fiber")
        out.report["results"] = run_fiber(cfg);
    else if (cfg.command == "hecke")
        out.report["results"] = run_hecke(cfg, code);
    else if (cfg.command == "tower")
        out.report["results"] = run_tower(cfg, code);
    else if (cfg.command == "selftest")
        out.report["results"] = run_selftest(cfg, code);
    else
        throw input_error("unknown command '" + cfg.command + "'");
    out.exit_code = code;
    return out;
}

int run_cli(const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    try {
        RunOutcome out = run(cfg);
        std::string text = out.report.dump(2);
        text.push_back('\n');
        if (cfg.out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(cfg.out_path, std::ios::binary);
            if (!f) throw input_error("cannot write '" + cfg.out_path + "'");
            f << text;
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0).count();
        std::cerr << "laf " << cfg.command << ": " << ms << " ms\n";
        return out.exit_code;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const compute_error& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace laf
