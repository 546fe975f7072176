#include "vdhla/fsla.hpp"

#include <stdexcept>

namespace vdhla {

namespace {
std::vector<int> uniform_depths(int k, int depth) {
    if (depth < 1) throw std::invalid_argument("Fsla: depth must be >= 1");
    return std::vector<int>(static_cast<std::size_t>(k), depth);
}
}  // namespace

Fsla::Fsla(int k, int depth) : Fsla(k, uniform_depths(k, depth)) {}

Fsla::Fsla(int k, std::vector<int> depths) : k_(k), depths_(std::move(depths)) {
    if (k_ < 1) throw std::invalid_argument("Fsla: need at least one action");
    if (depths_.size() != static_cast<std::size_t>(k_))
        throw std::invalid_argument("Fsla: one depth per action required");
    for (int d : depths_)
        if (d < 1) throw std::invalid_argument("Fsla: depths must be >= 1");
    // Start at the boundary state of action 1: no unearned memory bias.
    state_ = {1, depths_[0]};
}

int Fsla::depth(int action) const {
    if (action < 1 || action > k_) throw std::out_of_range("Fsla: action out of range");
    return depths_[static_cast<std::size_t>(action - 1)];
}

bool Fsla::is_action_switching(int signal) const {
    return signal == 0 && state_.position == depth(state_.action);
}

bool Fsla::is_depth_transition(int signal) const {
    return signal == 1 && state_.position <= 2;
}

void Fsla::update(double signal) {
    if (signal == 1.0) {
        if (state_.position > 1) --state_.position;
    } else if (signal == 0.0) {
        if (state_.position == depth(state_.action)) {
            state_.action = state_.action % k_ + 1;  // clockwise
            state_.position = depth(state_.action);
        } else {
            ++state_.position;
        }
    } else {
        throw std::invalid_argument("Fsla: P-model signal must be 0 or 1");
    }
}

void Fsla::set_depth(int action, int new_depth) {
    if (new_depth < 1) throw std::invalid_argument("Fsla: depth must be >= 1");
    depths_[static_cast<std::size_t>(action - 1)] = new_depth;
}

void Fsla::set_all_depths(int new_depth) {
    if (new_depth < 1) throw std::invalid_argument("Fsla: depth must be >= 1");
    for (int& d : depths_) d = new_depth;
}

void Fsla::set_state(AutomatonState s) {
    if (s.action < 1 || s.action > k_ || s.position < 1 || s.position > depth(s.action))
        throw std::invalid_argument("Fsla: state outside the automaton graph");
    state_ = s;
}

}  // namespace vdhla
