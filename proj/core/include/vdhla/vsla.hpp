#pragma once

#include "vdhla/automaton.hpp"
#include "vdhla/probability_vector.hpp"
#include "vdhla/scheme.hpp"

namespace vdhla {

// Variable-structure automaton: samples from an action probability vector
// and updates it with the linear reward/penalty scheme.
class Vsla : public Automaton {
public:
    Vsla(int k, UpdateScheme scheme);

    int action_count() const override { return static_cast<int>(probs_.size()); }
    int select_action(Rng& rng) override;
    void update(double signal) override;

    const ProbabilityVector& probabilities() const { return probs_; }

private:
    ProbabilityVector probs_;
    UpdateScheme scheme_;
    std::size_t last_chosen_ = 0;
    bool has_chosen_ = false;
};

// Uniform random action each step; reinforcement is ignored.
class PureChance : public Automaton {
public:
    explicit PureChance(int k);
    int action_count() const override { return k_; }
    int select_action(Rng& rng) override {
        return static_cast<int>(next_index(rng, static_cast<std::size_t>(k_))) + 1;
    }
    void update(double) override {}

private:
    int k_;
};

}  // namespace vdhla
