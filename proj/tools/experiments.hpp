#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"

namespace dimerlab::cli {

// filesystem problems map to exit code 4
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One numeric table destined for a CSV file.
struct CurveRecord {
    std::string name;  // file-stem suffix
    std::string tag;   // short description for the metadata block
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::vector<std::string> known_experiments();

// Validates the parameter schema (unknown keys rejected) and computes the
// curves; pure apart from determinism-preserving parallel kernels.
std::vector<CurveRecord> run_experiment(const std::string& id,
                                        const std::map<std::string, std::string>& params);

// Emits <base>_<record>.csv per record, a <base>.meta.json sidecar and an
// optional <base>.gp plot script. Returns the written paths.
std::vector<std::string> write_records(const std::string& base, const ExperimentConfig& cfg,
                                       const std::map<std::string, std::string>& point_params,
                                       const std::vector<CurveRecord>& records);

// `run` subcommand body; returns written paths.
std::vector<std::string> run_config(const ExperimentConfig& cfg);

// `sweep` subcommand body: Cartesian product over the axes, `workers` threads,
// per-point records plus an index file. Returns the process exit code
// (0 unless every point failed).
int sweep_config(const ExperimentConfig& cfg, std::size_t workers);

}  // namespace dimerlab::cli
