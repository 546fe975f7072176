#pragma once

#include <vector>

#include "vdhla/automaton.hpp"

namespace vdhla {

// State of a fixed-structure automaton: the pair (action, position), both
// 1-based. Position 1 is the deepest (most committed) state of the action,
// position depth(action) the boundary.
struct AutomatonState {
    int action = 1;
    int position = 1;
    friend bool operator==(const AutomatonState&, const AutomatonState&) = default;
};

// Tsetlin automaton over K actions with a per-action memory depth.
// A favorable response moves one state deeper (floored at position 1), an
// unfavorable one moves outward; a penalty at the boundary switches to the
// next action clockwise, entering at that action's own boundary state.
class Fsla : public Automaton {
public:
    // Uniform depth N for all K actions.
    Fsla(int k, int depth);
    // Per-action depths (the asymmetric hybrid reshapes these one at a time).
    Fsla(int k, std::vector<int> depths);

    int action_count() const override { return k_; }
    int select_action(Rng&) override { return state_.action; }
    int current_action() const { return state_.action; }
    const AutomatonState& state() const { return state_; }
    int depth(int action) const;
    const std::vector<int>& depths() const { return depths_; }

    // True when a pending penalty would move the automaton off this action.
    bool is_action_switching(int signal) const;
    // True when a pending reward lands in (or stays at) the deepest state.
    bool is_depth_transition(int signal) const;

    void update(double signal) override;

    // Depth adjustment hooks for the hybrids. set_depth never clamps the
    // live position; callers adjust depth only at switch instants and then
    // re-enter the boundary.
    void set_depth(int action, int new_depth);
    void set_all_depths(int new_depth);
    void enter_boundary() { state_.position = depth(state_.action); }

    // Testing/diagnostics: place the automaton at an explicit state.
    void set_state(AutomatonState s);

private:
    int k_;
    std::vector<int> depths_;
    AutomatonState state_;
};

}  // namespace vdhla
