#include "vdhla/hybrid.hpp"

#include <cassert>
#include <stdexcept>

namespace vdhla {

namespace {
constexpr std::size_t kGrow = static_cast<std::size_t>(DepthAction::Grow);
constexpr std::size_t kStop = static_cast<std::size_t>(DepthAction::Stop);
constexpr std::size_t kShrink = static_cast<std::size_t>(DepthAction::Shrink);
}  // namespace

HybridAutomaton HybridAutomaton::svdhla(int k, int initial_depth, double lambda1,
                                        double lambda2, int max_depth) {
    return HybridAutomaton(DepthMode::Symmetric, k,
                           std::vector<int>(static_cast<std::size_t>(k), initial_depth),
                           lambda1, lambda2, max_depth);
}

HybridAutomaton HybridAutomaton::avdhla(int k, std::vector<int> initial_depths,
                                        double lambda1, double lambda2,
                                        int max_depth) {
    return HybridAutomaton(DepthMode::Asymmetric, k, std::move(initial_depths),
                           lambda1, lambda2, max_depth);
}

HybridAutomaton::HybridAutomaton(DepthMode mode, int k, std::vector<int> depths,
                                 double lambda1, double lambda2, int max_depth)
    : mode_(mode), fsla_(k, std::move(depths)), max_depth_(max_depth) {
    if (max_depth_ < 1) throw std::invalid_argument("HybridAutomaton: max_depth must be >= 1");
    for (int a = 1; a <= k; ++a)
        if (fsla_.depth(a) > max_depth_)
            throw std::invalid_argument("HybridAutomaton: initial depth exceeds max_depth");
    const std::size_t scopes = mode_ == DepthMode::Symmetric ? 1u : static_cast<std::size_t>(k);
    controllers_.assign(scopes, Vasla(3, UpdateScheme(lambda1, lambda2)));
    counters_.assign(scopes, DepthCounters{});
}

Vasla& HybridAutomaton::scope_controller(int action) {
    return controllers_[scope_index(action)];
}

DepthCounters& HybridAutomaton::scope_counters(int action) {
    return counters_[scope_index(action)];
}

const Vasla& HybridAutomaton::controller(int action) const {
    return controllers_[scope_index(action)];
}

const DepthCounters& HybridAutomaton::counters(int action) const {
    return counters_[scope_index(action)];
}

int HybridAutomaton::select_action(Rng& rng) {
    if (pending_) {
        pending_ = false;
        if (!frozen_) {
            const int governed = mode_ == DepthMode::Symmetric
                                     ? fsla_.depth(fsla_.current_action())
                                     : fsla_.depth(departed_);
            // The automaton entered the new action at its boundary and no
            // interaction happened since, so the position is the boundary.
            assert(fsla_.state().position == fsla_.depth(fsla_.current_action()));

            std::vector<std::size_t> offered =
                governed == 1 ? std::vector<std::size_t>{kGrow, kStop}
                              : std::vector<std::size_t>{kGrow, kStop, kShrink};
            const std::size_t choice = scope_controller(departed_).select(rng, offered);

            int delta = 0;
            if (choice == kGrow)
                delta = governed < max_depth_ ? 1 : 0;  // capped Grow degrades to Stop
            else if (choice == kShrink)
                delta = -1;

            if (delta != 0) {
                if (mode_ == DepthMode::Symmetric) {
                    fsla_.set_all_depths(governed + delta);
                    fsla_.enter_boundary();
                } else {
                    fsla_.set_depth(departed_, governed + delta);
                }
            }
        }
    }
    return fsla_.current_action();
}

void HybridAutomaton::update(double signal) {
    if (signal == 1.0) {
        DepthCounters& c = scope_counters(fsla_.current_action());
        if (fsla_.is_depth_transition(1)) ++c.depth_transitions;
        fsla_.update(1);
        ++c.transitions;
    } else if (signal == 0.0) {
        const int current = fsla_.current_action();
        DepthCounters& c = scope_counters(current);
        ++c.transitions;
        if (fsla_.is_action_switching(0)) {
            const double beta =
                c.transitions > 0
                    ? static_cast<double>(c.depth_transitions) / static_cast<double>(c.transitions)
                    : 0.0;
            last_beta_ = beta;
            scope_controller(current).update(beta);
            c = DepthCounters{};
            assert(!pending_ && "select/update alternation violated");
            pending_ = true;
            departed_ = current;
        }
        fsla_.update(0);
    } else {
        throw std::invalid_argument("HybridAutomaton: P-model signal must be 0 or 1");
    }
}

}  // namespace vdhla
