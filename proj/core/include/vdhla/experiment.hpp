#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vdhla/automaton.hpp"
#include "vdhla/environment.hpp"
#include "vdhla/metrics.hpp"

namespace vdhla::exp {

// Raised for malformed or inconsistent configuration; the CLI maps it to its
// config-error exit code.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AutomatonSpec {
    enum class Kind { PureChance, Fsla, Vsla, Svdhla, Avdhla };
    Kind kind = Kind::PureChance;
    int k = 2;
    std::vector<int> depths;  // one entry = uniform depth
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    int max_depth = 20;
};

struct EnvironmentSpec {
    enum class Kind { Stationary, Markov, StateDependent };
    Kind kind = Kind::Stationary;
    std::vector<double> reward_probs;
    env::Matrix transition;
    env::Matrix reward;
    int initial_state = 1;
    std::vector<double> theta;
    std::vector<double> phi;
};

struct ExperimentConfig {
    std::string name;
    AutomatonSpec automaton;
    EnvironmentSpec environment;
    long iterations = 1;
    std::vector<std::uint64_t> seeds;
    std::optional<int> favorable_action;  // 1-based

    // Throws ConfigError on any violated constraint.
    void validate() const;
};

std::unique_ptr<Automaton> make_automaton(const AutomatonSpec& spec);
std::unique_ptr<env::Environment> make_environment(const EnvironmentSpec& spec);

ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::string& path);
std::string normalized_config_json(const ExperimentConfig& config);

// One seeded interaction loop: select, respond, record, update.
MetricsTrace run_trial(const ExperimentConfig& config, std::uint64_t seed);

}  // namespace vdhla::exp
