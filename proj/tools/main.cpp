#include "runner.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using wmha::cli::RunConfig;

    CLI::App app{"Verify weak multiplier Hopf algebras built from finite groupoids and separability idempotents"};
    app.require_subcommand(1);

    std::string kind = "kg", suites = "axioms";
    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool with_suites) {
        sub->add_option("--input", cfg.input, "Groupoid or separability JSON file")->required();
        sub->add_option("--kind", kind, "kg, cg, sep, diamond, dual-of-<kind> or bidual-of-<kind>");
        if (with_suites) sub->add_option("--suites", suites, "Comma-separated: axioms,integrals,transfer,duality,radford");
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--jobs", cfg.jobs, "Worker threads for law checks")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Seed for sampled tuples and integral search");
        sub->add_option("--max-exhaustive-dim", cfg.max_exhaustive_dim, "Largest dimension checked exhaustively");
        sub->add_flag("--timing", cfg.timing, "Include per-suite timing (breaks byte-identical reports)");
    };
    add_common(app.add_subcommand("validate", "Parse and validate the input"), false);
    add_common(app.add_subcommand("check", "Run verification suites"), true);
    add_common(app.add_subcommand("integrals", "Enumerate integrals and test faithfulness"), false);
    add_common(app.add_subcommand("dual", "Build the dual and emit its structure constants"), false);
    add_common(app.add_subcommand("bidual", "Verify the evaluation map into the bidual"), false);
    add_common(app.add_subcommand("radford", "Modular element, S^2 and S^4"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    std::string out, err;
    int status = 2;
    try {
        cfg.kind = wmha::cli::Kind::parse(kind);
        cfg.suites.clear();
        std::stringstream ss(suites);
        for (std::string s; std::getline(ss, s, ',');)
            if (!s.empty()) cfg.suites.push_back(s);
        status = wmha::cli::run(cfg, out, err);
    } catch (const wmha::InputError& e) {
        err = std::string("wmha: input: ") + e.what() + "\n";
    }
    std::cout << out;
    std::cerr << err;
    return status;
}
