#pragma once

#include <stdexcept>
#include <string>

namespace vdhla {

// Linear reinforcement scheme: lambda1 rewards, lambda2 penalizes.
// The named presets fix the parameter pattern:
//   PureChance  lambda1 = lambda2 = 0
//   L_RI        lambda1 = c,  lambda2 = 0
//   L_PI        lambda1 = 0,  lambda2 = c
//   L_RP        lambda1 = lambda2 = c
//   L_ReP       lambda1 = c1, lambda2 = c2, c1 > c2
struct UpdateScheme {
    double lambda1 = 0.0;
    double lambda2 = 0.0;

    UpdateScheme() = default;
    UpdateScheme(double l1, double l2) : lambda1(l1), lambda2(l2) {
        if (l1 < 0.0 || l1 > 1.0 || l2 < 0.0 || l2 > 1.0)
            throw std::invalid_argument("UpdateScheme: rates must lie in [0,1]");
    }

    static UpdateScheme pure_chance() { return {0.0, 0.0}; }
    static UpdateScheme reward_inaction(double c) { return {c, 0.0}; }
    static UpdateScheme penalty_inaction(double c) { return {0.0, c}; }
    static UpdateScheme reward_penalty(double c) { return {c, c}; }
    static UpdateScheme reward_epsilon_penalty(double c1, double c2) {
        if (!(c1 > c2))
            throw std::invalid_argument("L_ReP requires lambda1 > lambda2");
        return {c1, c2};
    }

    bool is_pure_chance() const { return lambda1 == 0.0 && lambda2 == 0.0; }
};

}  // namespace vdhla
