#pragma once

#include <optional>
#include <vector>

#include "vdhla/probability_vector.hpp"
#include "vdhla/scheme.hpp"

namespace vdhla {

// Variable action set automaton in the S-model: selection happens over an
// externally supplied subset (probabilities rescaled over it), reinforcement
// is a continuous beta in [0,1] applied to the last chosen action over the
// full vector.
class Vasla {
public:
    Vasla(int k, UpdateScheme scheme);

    std::size_t action_count() const { return probs_.size(); }
    const ProbabilityVector& probabilities() const { return probs_; }
    const UpdateScheme& scheme() const { return scheme_; }
    std::optional<std::size_t> last_action() const { return last_; }

    // 0-based index drawn from the rescaled distribution over `available`.
    std::size_t select(Rng& rng, const std::vector<std::size_t>& available);

    // Grades the previous selection; a no-op before the first selection.
    void update(double beta);

private:
    ProbabilityVector probs_;
    UpdateScheme scheme_;
    std::optional<std::size_t> last_;
};

}  // namespace vdhla
