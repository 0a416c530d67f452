#include <cstdio>
#include <exception>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "dimerlab/errors.hpp"
#include "experiments.hpp"

namespace {

dimerlab::cli::ExperimentConfig load(const std::string& path, const std::string& out_override) {
    auto cfg = dimerlab::cli::ExperimentConfig::from(dimerlab::cli::ConfigFile::parse_file(path));
    if (!out_override.empty()) cfg.output = out_override;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimerlab: molecular dissociation and collision quantum-information laboratory"};
    app.require_subcommand(1);

    std::string config_path, out_override;
    std::size_t workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;

    auto* run = app.add_subcommand("run", "execute one experiment config");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("--out", out_override, "override the output base path");

    auto* sweep = app.add_subcommand("sweep", "execute the Cartesian sweep of a config");
    sweep->add_option("config", config_path, "config file")->required();
    sweep->add_option("--workers", workers, "concurrent sweep points");
    sweep->add_option("--out", out_override, "override the output directory");

    auto* list = app.add_subcommand("list-experiments", "print the known experiment ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& id : dimerlab::cli::known_experiments()) std::printf("%s\n", id.c_str());
            return 0;
        }
        if (run->parsed()) {
            for (const auto& f : dimerlab::cli::run_config(load(config_path, out_override)))
                std::printf("%s\n", f.c_str());
            return 0;
        }
        return dimerlab::cli::sweep_config(load(config_path, out_override), workers);
    } catch (const dimerlab::cli::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const dimerlab::cli::io_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
