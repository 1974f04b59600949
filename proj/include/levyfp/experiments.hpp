#pragma once

#include <filesystem>

#include "levyfp/config.hpp"

#include "json.hpp"

namespace levyfp {

struct RunOptions {
    std::filesystem::path out_dir = "out";
    std::string format = "both";  // csv | json | both
    int jobs = 1;
    bool write_outputs = true;
};

struct ExperimentSummary {
    std::string experiment;
    std::uint64_t config_hash = 0;
    bool pass = false;
    nlohmann::json details;
};

// Reproduce the long-time, classical-limit, singular-limit, positivity, and
// regularity claims as rate-fit experiments. Every run is deterministic given
// (config, seed); every emitted number is checked finite.
ExperimentSummary run_verify_kernel(const RunConfig& cfg, const RunOptions& opt);
ExperimentSummary run_evolve(const RunConfig& cfg, const RunOptions& opt);
ExperimentSummary run_equilibrium(const RunConfig& cfg, const RunOptions& opt);
ExperimentSummary run_decay_rate(const RunConfig& cfg, const RunOptions& opt);
ExperimentSummary run_eps_limit(const RunConfig& cfg, const RunOptions& opt);
ExperimentSummary run_s_limit(const RunConfig& cfg, const RunOptions& opt);
ExperimentSummary run_gclt(const RunConfig& cfg, const RunOptions& opt);
ExperimentSummary run_regularity(const RunConfig& cfg, const RunOptions& opt);
ExperimentSummary run_wild_verify(const RunConfig& cfg, const RunOptions& opt);
ExperimentSummary run_lyapunov(const RunConfig& cfg, const RunOptions& opt);

// Baseline config (kernel, grid, lists) each experiment was tuned on.
RunConfig default_config(const std::string& experiment);

// Dispatch by experiment name; throws ConfigError for unknown names.
ExperimentSummary run_experiment(const std::string& experiment, const RunConfig& cfg,
                                 const RunOptions& opt);

// Writes <name>_summary.json ({experiment, config_hash, results, pass}).
void write_summary(const ExperimentSummary& summary, const RunConfig& cfg,
                   const RunOptions& opt);

}  // namespace levyfp
