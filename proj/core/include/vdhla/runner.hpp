#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vdhla/experiment.hpp"

namespace vdhla::exp {

struct ConfigSummary {
    std::string name;
    Aggregate tnr;
    Aggregate tnas;
    double mean_p_favorable = 0.0;
    long seeds = 0;
};

struct SuiteResult {
    std::vector<ConfigSummary> summaries;
    std::vector<std::filesystem::path> written_files;
};

// Runs every (config, seed) pair, one CSV per trial plus an aggregate
// summary.json under `out_dir`. Trials execute in parallel (`parallelism`
// threads, 0 = hardware default); outputs are written in deterministic
// (config, seed) order. On I/O failure all partial outputs are removed and
// the error rethrown.
SuiteResult run_suite(const std::vector<ExperimentConfig>& configs,
                      const std::filesystem::path& out_dir,
                      unsigned parallelism = 0);

std::string summary_json(const std::vector<ConfigSummary>& summaries);

// CSV layout shared with the CLI: iteration,reward,cum_tnr,cum_tnas,action,p_favorable
void write_trial_csv(const std::filesystem::path& path, const MetricsTrace& trace);

}  // namespace vdhla::exp
