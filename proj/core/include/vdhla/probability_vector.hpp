#pragma once

#include <cstddef>
#include <vector>

#include "vdhla/rng.hpp"
#include "vdhla/scheme.hpp"

namespace vdhla {

// Action probability vector: nonnegative weights over an action set summing
// to 1 within 1e-9. Updates renormalize only when floating-point drift
// exceeds 1e-12 so exact hand-traced values survive untouched.
class ProbabilityVector {
public:
    static constexpr double kSumTolerance = 1e-9;
    static constexpr double kDriftTolerance = 1e-12;

    ProbabilityVector() = default;
    explicit ProbabilityVector(std::vector<double> weights);
    static ProbabilityVector uniform(std::size_t n);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }

    double sum() const;
    bool valid() const;

    // Sample an index from the full distribution.
    std::size_t sample(Rng& rng) const;

    // Sample among `available` (indices into this vector) after scaling the
    // sub-vector to sum 1. Throws std::domain_error when the available mass
    // is zero.
    std::size_t sample_subset(Rng& rng, const std::vector<std::size_t>& available) const;

    void renormalize_if_drifted();

private:
    std::vector<double> weights_;
};

// Scale the available weights of `p` so they sum to 1, preserving the order
// of `available`. Errors when the available mass is zero.
std::vector<double> vasla_scale(const ProbabilityVector& p,
                                const std::vector<std::size_t>& available);

// Linear reward (beta = 1) / penalty (beta = 0) update for a VSLA.
// `chosen` is a 0-based index.
ProbabilityVector vsla_update(const ProbabilityVector& p, std::size_t chosen,
                              int signal, const UpdateScheme& scheme);

// S-model update for a variable action set automaton over the full vector:
// chosen weight moves by lambda1*beta toward 1 and by lambda2*(1-beta)
// toward 0; the rest mirror. `r` is the available-action count entering the
// penalty redistribution term.
ProbabilityVector vasla_update(const ProbabilityVector& p, std::size_t chosen,
                               double beta, const UpdateScheme& scheme,
                               std::size_t r);

}  // namespace vdhla
