#include "vdhla/vasla.hpp"

#include <stdexcept>

namespace vdhla {

Vasla::Vasla(int k, UpdateScheme scheme)
    : probs_(ProbabilityVector::uniform(static_cast<std::size_t>(k))),
      scheme_(scheme) {
    if (k < 2) throw std::invalid_argument("Vasla: need at least two actions");
}

std::size_t Vasla::select(Rng& rng, const std::vector<std::size_t>& available) {
    last_ = probs_.sample_subset(rng, available);
    return *last_;
}

void Vasla::update(double beta) {
    if (!last_) return;
    probs_ = vasla_update(probs_, *last_, beta, scheme_, probs_.size());
}

}  // namespace vdhla
