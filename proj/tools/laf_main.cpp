#include <CLI11.hpp>

#include "laf/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"laf: trace-form discriminants, Jacobson strata and rank-1 "
                 "Iwahori-Hecke irreducibility"};
    app.require_subcommand(1);

    laf::RunConfig cfg;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_path, "output path (default: stdout)"); };

    auto* disc = app.add_subcommand("disc", "discriminant of an algebra spec");
    disc->add_option("algebra", cfg.input_path, "algebra spec JSON")->required();
    add_out(disc);

    auto* stratify = app.add_subcommand("stratify", "determinantal ideals and sampled strata");
    stratify->add_option("algebra", cfg.input_path, "algebra spec JSON")->required();
    stratify->add_option("--max-minors", cfg.max_minors, "minor budget (default 20000)");
    stratify->add_option("--chars", cfg.char_path, "characters JSON (object or array)");
    add_out(stratify);

    auto* fiber = app.add_subcommand("fiber", "fiber report at a character");
    fiber->add_option("algebra", cfg.input_path, "algebra spec JSON")->required();
    fiber->add_option("--char", cfg.char_path, "character JSON")->required();
    double tol = 0.0;
    auto* tol_opt = fiber->add_option("--tol", tol, "tolerance override (float mode)");
    fiber->add_option("--seed", cfg.seed, "random seed");
    add_out(fiber);

    auto* hecke = app.add_subcommand("hecke", "rank-1 Iwahori-Hecke presets");
    hecke->add_option("--preset", cfg.preset, "gl2|sl2|pgl2")->required();
    hecke->add_flag("--compare", cfg.compare, "compare against the closed form");
    hecke->add_option("--char", cfg.char_path, "character JSON for an irreducibility verdict");
    auto* tol_opt2 = hecke->add_option("--tol", tol, "tolerance override (float mode)");
    hecke->add_option("--seed", cfg.seed, "random seed");
    add_out(hecke);

    auto* tower = app.add_subcommand("tower", "tower identities for a tower spec");
    tower->add_option("tower", cfg.input_path, "tower spec JSON")->required();
    tower->add_option("--seed", cfg.seed, "random seed");
    add_out(tower);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    selftest->add_option("--seed", cfg.seed, "random seed");
    add_out(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (disc->parsed()) cfg.command = "disc";
    if (stratify->parsed()) cfg.command = "stratify";
    if (fiber->parsed()) cfg.command = "fiber";
    if (hecke->parsed()) cfg.command = "hecke";
    if (tower->parsed()) cfg.command = "tower";
    if (selftest->parsed()) cfg.command = "selftest";
    if (tol_opt->count() || tol_opt2->count()) cfg.tol_override = tol;

    return laf::run_cli(cfg);
}
