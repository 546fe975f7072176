#pragma once

#include <vector>

#include "vdhla/rng.hpp"

namespace vdhla::env {

using Matrix = std::vector<std::vector<double>>;

// P-model reinforcement generator: 1 rewards, 0 penalizes.
class Environment {
public:
    virtual ~Environment() = default;
    virtual int action_count() const = 0;
    // `action` is 1-based.
    virtual int respond(int action, Rng& rng) = 0;
};

// Fixed per-action reward probabilities d_i (penalty probability 1 - d_i).
class StationaryEnv : public Environment {
public:
    explicit StationaryEnv(std::vector<double> reward_probs);
    int action_count() const override { return static_cast<int>(d_.size()); }
    int respond(int action, Rng& rng) override;
    const std::vector<double>& reward_probs() const { return d_; }

private:
    std::vector<double> d_;
};

// Reward probabilities governed by an ergodic Markov chain over component
// environments: R[s][a] rewards action a in chain state s. The chain
// advances one step per interaction.
class MarkovSwitchingEnv : public Environment {
public:
    MarkovSwitchingEnv(Matrix transition, Matrix reward, int initial_state = 1);
    int action_count() const override { return static_cast<int>(reward_[0].size()); }
    int state_count() const { return static_cast<int>(transition_.size()); }
    int current_state() const { return state_; }  // 1-based
    int respond(int action, Rng& rng) override;
    const Matrix& transition() const { return transition_; }
    const Matrix& reward() const { return reward_; }

private:
    Matrix transition_;
    Matrix reward_;
    int state_;
};

// Model A drift: each use degrades the chosen action's reward probability by
// theta while every other action recovers by phi, clamped to [0,1]. The
// drift applies on every interaction regardless of the outcome.
class StateDependentEnv : public Environment {
public:
    StateDependentEnv(std::vector<double> reward_probs, std::vector<double> theta,
                      std::vector<double> phi);
    StateDependentEnv(std::vector<double> reward_probs, double theta, double phi);
    int action_count() const override { return static_cast<int>(d_.size()); }
    int respond(int action, Rng& rng) override;
    const std::vector<double>& reward_probs() const { return d_; }

private:
    std::vector<double> d_;
    std::vector<double> theta_;
    std::vector<double> phi_;
};

// Unique stationary distribution v with vT = v, sum(v) = 1. Requires a
// row-stochastic ergodic matrix; throws std::invalid_argument otherwise.
std::vector<double> steady_state(const Matrix& transition);

// Per-action reward probabilities of the stationary environment equivalent
// to a Markovian switching one: steady_state(T) * R.
std::vector<double> effective_stationary(const MarkovSwitchingEnv& env);

}  // namespace vdhla::env
