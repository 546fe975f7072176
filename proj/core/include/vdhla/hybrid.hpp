#pragma once

#include <optional>
#include <vector>

#include "vdhla/automaton.hpp"
#include "vdhla/fsla.hpp"
#include "vdhla/vasla.hpp"

namespace vdhla {

// Depth moves offered to a controller at an action switch. Shrink is never
// offered when the governed depth is 1.
enum class DepthAction : std::size_t { Grow = 0, Stop = 1, Shrink = 2 };

// Per-scope transition bookkeeping feeding the controller's reinforcement:
// beta_v = depth_transitions / transitions, reset at the scope's switch.
struct DepthCounters {
    long depth_transitions = 0;
    long transitions = 0;
};

// Variable depth hybrid automaton. A Tsetlin skeleton interacts with the
// outer P-model environment; at each action switch a variable action set
// controller picks Grow/Stop/Shrink for the memory depth. In symmetric mode
// one controller reshapes every action's depth together; in asymmetric mode
// each action owns a controller and only the departed action's depth moves.
class HybridAutomaton : public Automaton {
public:
    enum class DepthMode { Symmetric, Asymmetric };

    static HybridAutomaton svdhla(int k, int initial_depth, double lambda1,
                                  double lambda2, int max_depth = kDefaultMaxDepth);
    static HybridAutomaton avdhla(int k, std::vector<int> initial_depths,
                                  double lambda1, double lambda2,
                                  int max_depth = kDefaultMaxDepth);

    static constexpr int kDefaultMaxDepth = 20;

    int action_count() const override { return fsla_.action_count(); }

    // When the last update crossed an action boundary, lets the governing
    // controller adjust the depth before reporting the (already rotated)
    // action; otherwise a pass-through.
    int select_action(Rng& rng) override;

    void update(double signal) override;

    int depth_of(int action) const { return fsla_.depth(action); }
    DepthMode mode() const { return mode_; }
    int max_depth() const { return max_depth_; }
    const Fsla& fsla() const { return fsla_; }
    bool switch_pending() const { return pending_; }

    // Scope accessors: symmetric mode ignores `action`.
    const Vasla& controller(int action = 1) const;
    const DepthCounters& counters(int action = 1) const;

    // Reinforcement fed to a controller at the most recent switch.
    std::optional<double> last_controller_beta() const { return last_beta_; }

    // Disables depth adaptation: switches skip the controller draw and the
    // structure never changes, leaving the trajectory identical to a plain
    // Fsla driven by the same seed. Feedback bookkeeping still runs.
    void freeze_depth(bool frozen) { frozen_ = frozen; }

private:
    HybridAutomaton(DepthMode mode, int k, std::vector<int> depths,
                    double lambda1, double lambda2, int max_depth);

    Vasla& scope_controller(int action);
    DepthCounters& scope_counters(int action);
    std::size_t scope_index(int action) const {
        return mode_ == DepthMode::Symmetric ? 0u
                                             : static_cast<std::size_t>(action - 1);
    }

    DepthMode mode_;
    Fsla fsla_;
    std::vector<Vasla> controllers_;
    std::vector<DepthCounters> counters_;
    int max_depth_;
    bool frozen_ = false;
    bool pending_ = false;
    int departed_ = 0;
    std::optional<double> last_beta_;
};

}  // namespace vdhla
