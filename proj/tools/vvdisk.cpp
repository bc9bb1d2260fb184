#include "vvdisk/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

int main(int argc, char** argv) {
    CLI::App app{"vvdisk: Stokes eigenbasis of the unit disk, Galerkin Navier-Stokes runs and "
                 "vanishing-viscosity diagnostics"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::string> out;
    std::optional<int> threads;
    std::optional<std::uint64_t> seed;
    std::optional<int> n_max;
    std::optional<int> k_max;
    std::vector<std::string> lemmas;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
        sub->add_option("--out", out, "output directory");
        sub->add_option("--threads", threads, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", seed, "seed for random presets");
    };
    CLI::App* zeros = app.add_subcommand("zeros", "table of Bessel zeros j_{n,k} (zeros.csv)");
    CLI::App* basis = app.add_subcommand("basis", "eigenpair table (basis.csv)");
    CLI::App* simulate = app.add_subcommand("simulate", "one Galerkin run (trace.csv, snapshots/)");
    CLI::App* sweep = app.add_subcommand("sweep", "viscosity sweep (diagnostics.csv)");
    CLI::App* verify = app.add_subcommand("verify", "lemma verification (lemmas.csv)");
    for (CLI::App* sub : {zeros, basis, simulate, sweep, verify}) add_common(sub);
    for (CLI::App* sub : {zeros, basis, verify}) {
        sub->add_option("--n-max", n_max, "largest n");
        sub->add_option("--k-max", k_max, "largest k");
    }
    verify->add_option("--lemma", lemmas, "lemma id (repeatable; default all)");

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        vvdisk::cli::RunConfig cfg;
        if (!config_path.empty()) cfg = vvdisk::cli::load_config(config_path);
        if (!cfg.command.empty() && cfg.command != command) {
            std::cerr << "error: config is for '" << cfg.command << "', not '" << command << "'\n";
            return 2;
        }
        cfg.command = command;
        if (out) cfg.out = *out;
        if (threads) cfg.threads = *threads;
        if (seed) cfg.seed = *seed;
        if (command == "verify") {
            if (n_max) cfg.verify.ranges.n_max = *n_max;
            if (k_max) cfg.verify.ranges.k_max = *k_max;
            if (!lemmas.empty()) cfg.verify.lemmas = lemmas;
        } else {
            if (n_max) cfg.table.n_max = *n_max;
            if (k_max) cfg.table.k_max = *k_max;
        }
        return vvdisk::cli::run(cfg, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
