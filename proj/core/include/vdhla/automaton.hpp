#pragma once

#include "vdhla/rng.hpp"

namespace vdhla {

// Common surface of every automaton in the workbench. Actions are 1-based.
// Instances are single-threaded mutable state machines; parallelism happens
// one level up, across independent trials.
class Automaton {
public:
    virtual ~Automaton() = default;
    virtual int action_count() const = 0;
    virtual int select_action(Rng& rng) = 0;
    // Reinforcement in [0,1]; P-model automata require {0,1}.
    virtual void update(double signal) = 0;
};

}  // namespace vdhla
