#include "vdhla/vsla.hpp"

#include <stdexcept>

namespace vdhla {

Vsla::Vsla(int k, UpdateScheme scheme)
    : probs_(ProbabilityVector::uniform(static_cast<std::size_t>(k))),
      scheme_(scheme) {
    if (k < 2) throw std::invalid_argument("Vsla: need at least two actions");
}

int Vsla::select_action(Rng& rng) {
    last_chosen_ = probs_.sample(rng);
    has_chosen_ = true;
    return static_cast<int>(last_chosen_) + 1;
}

void Vsla::update(double signal) {
    if (signal != 0.0 && signal != 1.0)
        throw std::invalid_argument("Vsla: P-model signal must be 0 or 1");
    if (!has_chosen_)
        throw std::logic_error("Vsla: update before any action selection");
    probs_ = vsla_update(probs_, last_chosen_, static_cast<int>(signal), scheme_);
}

PureChance::PureChance(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("PureChance: need at least one action");
}

}  // namespace vdhla
