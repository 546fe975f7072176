#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vdhla/mining/simulator.hpp"

namespace vdhla::mining {

struct SweepSpec {
    std::string name;
    DefenseSpec defense;
    std::vector<double> alphas;
    std::vector<std::uint64_t> seeds;
    long blocks = 10000;
    double gamma = 0.5;

    void validate() const;
};

struct SweepRow {
    double alpha = 0.0;
    std::uint64_t seed = 0;
    SimulationResult result;
};

struct SweepOutcome {
    std::vector<SweepRow> rows;             // (alpha, seed) order
    std::vector<double> mean_revenue;       // per alpha
    std::optional<double> threshold;        // smallest alpha with mean > alpha
};

// Runs the (alpha, seed) grid; points are independent and may execute in
// parallel. The lower-bound threshold is the smallest grid alpha whose mean
// selfish relative revenue exceeds alpha; absent when there is no crossing.
SweepOutcome run_sweep(const SweepSpec& spec, unsigned parallelism = 0);

void write_sweep_csv(const std::filesystem::path& path, const SweepSpec& spec,
                     const SweepOutcome& outcome);
std::string threshold_summary_json(const SweepSpec& spec, const SweepOutcome& outcome);

SweepSpec parse_sweep_config(const std::string& json_text);
SweepSpec load_sweep_config(const std::string& path);
std::string normalized_sweep_json(const SweepSpec& spec);

}  // namespace vdhla::mining
