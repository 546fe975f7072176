#include "vdhla/environment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vdhla::env {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(what);
}

void check_action(int action, int k) {
    if (action < 1 || action > k)
        throw std::out_of_range("environment: action out of range");
}

}  // namespace

StationaryEnv::StationaryEnv(std::vector<double> reward_probs)
    : d_(std::move(reward_probs)) {
    if (d_.empty()) throw std::invalid_argument("StationaryEnv: empty reward vector");
    for (double p : d_) check_probability(p, "StationaryEnv: probabilities must lie in [0,1]");
}

int StationaryEnv::respond(int action, Rng& rng) {
    check_action(action, action_count());
    return bernoulli(rng, d_[static_cast<std::size_t>(action - 1)]) ? 1 : 0;
}

MarkovSwitchingEnv::MarkovSwitchingEnv(Matrix transition, Matrix reward, int initial_state)
    : transition_(std::move(transition)), reward_(std::move(reward)), state_(initial_state) {
    const std::size_t s = transition_.size();
    if (s == 0) throw std::invalid_argument("MarkovSwitchingEnv: empty transition matrix");
    for (const auto& row : transition_) {
        if (row.size() != s)
            throw std::invalid_argument("MarkovSwitchingEnv: transition matrix must be square");
        double sum = 0.0;
        for (double p : row) {
            check_probability(p, "MarkovSwitchingEnv: transition entries must lie in [0,1]");
            sum += p;
        }
        if (std::fabs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("MarkovSwitchingEnv: transition rows must sum to 1");
    }
    if (reward_.size() != s)
        throw std::invalid_argument("MarkovSwitchingEnv: one reward row per chain state required");
    const std::size_t k = reward_[0].size();
    if (k == 0) throw std::invalid_argument("MarkovSwitchingEnv: empty reward row");
    for (const auto& row : reward_) {
        if (row.size() != k)
            throw std::invalid_argument("MarkovSwitchingEnv: ragged reward matrix");
        for (double p : row) check_probability(p, "MarkovSwitchingEnv: reward entries must lie in [0,1]");
    }
    if (initial_state < 1 || initial_state > static_cast<int>(s))
        throw std::invalid_argument("MarkovSwitchingEnv: initial state out of range");
}

int MarkovSwitchingEnv::respond(int action, Rng& rng) {
    check_action(action, action_count());
    const auto& rewards = reward_[static_cast<std::size_t>(state_ - 1)];
    const int signal = bernoulli(rng, rewards[static_cast<std::size_t>(action - 1)]) ? 1 : 0;

    // One chain step per interaction.
    const auto& row = transition_[static_cast<std::size_t>(state_ - 1)];
    const double u = next_double(rng);
    double acc = 0.0;
    int next = static_cast<int>(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
        acc += row[j];
        if (u < acc) {
            next = static_cast<int>(j) + 1;
            break;
        }
    }
    state_ = next;
    return signal;
}

StateDependentEnv::StateDependentEnv(std::vector<double> reward_probs,
                                     std::vector<double> theta, std::vector<double> phi)
    : d_(std::move(reward_probs)), theta_(std::move(theta)), phi_(std::move(phi)) {
    if (d_.empty()) throw std::invalid_argument("StateDependentEnv: empty reward vector");
    if (theta_.size() != d_.size() || phi_.size() != d_.size())
        throw std::invalid_argument("StateDependentEnv: theta/phi must match the action count");
    for (double p : d_) check_probability(p, "StateDependentEnv: probabilities must lie in [0,1]");
    for (double t : theta_)
        if (t < 0.0) throw std::invalid_argument("StateDependentEnv: theta must be nonnegative");
    for (double f : phi_)
        if (f < 0.0) throw std::invalid_argument("StateDependentEnv: phi must be nonnegative");
}

StateDependentEnv::StateDependentEnv(std::vector<double> reward_probs, double theta, double phi)
    : StateDependentEnv(std::move(reward_probs),
                        std::vector<double>(reward_probs.size(), theta),
                        std::vector<double>(reward_probs.size(), phi)) {}

int StateDependentEnv::respond(int action, Rng& rng) {
    check_action(action, action_count());
    const std::size_t i = static_cast<std::size_t>(action - 1);
    const int signal = bernoulli(rng, d_[i]) ? 1 : 0;

    // Chosen action worsens, the rest recover, clamped to [0,1].
    for (std::size_t j = 0; j < d_.size(); ++j) {
        if (j == i)
            d_[j] = std::max(0.0, d_[j] - theta_[j]);
        else
            d_[j] = std::min(1.0, d_[j] + phi_[j]);
    }
    return signal;
}

std::vector<double> effective_stationary(const MarkovSwitchingEnv& env) {
    const std::vector<double> v = steady_state(env.transition());
    const Matrix& r = env.reward();
    std::vector<double> d(r[0].size(), 0.0);
    for (std::size_t s = 0; s < v.size(); ++s)
        for (std::size_t a = 0; a < d.size(); ++a) d[a] += v[s] * r[s][a];
    return d;
}

}  // namespace vdhla::env
