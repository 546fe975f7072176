#include "vdhla/probability_vector.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vdhla {

ProbabilityVector::ProbabilityVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty())
        throw std::invalid_argument("ProbabilityVector: empty weight list");
    if (!valid())
        throw std::invalid_argument("ProbabilityVector: weights must lie in [0,1] and sum to 1");
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("ProbabilityVector: n must be positive");
    ProbabilityVector p;
    p.weights_.assign(n, 1.0 / static_cast<double>(n));
    return p;
}

double ProbabilityVector::sum() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

bool ProbabilityVector::valid() const {
    for (double w : weights_)
        if (!(w >= 0.0 && w <= 1.0)) return false;
    return std::fabs(sum() - 1.0) < kSumTolerance;
}

std::size_t ProbabilityVector::sample(Rng& rng) const {
    const double u = next_double(rng) * sum();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights_.size(); ++i) {
        acc += weights_[i];
        if (u < acc) return i;
    }
    return weights_.size() - 1;
}

std::size_t ProbabilityVector::sample_subset(
    Rng& rng, const std::vector<std::size_t>& available) const {
    const std::vector<double> scaled = vasla_scale(*this, available);
    const double u = next_double(rng);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < scaled.size(); ++i) {
        acc += scaled[i];
        if (u < acc) return available[i];
    }
    return available.back();
}

void ProbabilityVector::renormalize_if_drifted() {
    const double s = sum();
    if (std::fabs(s - 1.0) > kDriftTolerance) {
        for (double& w : weights_) w /= s;
    }
}

std::vector<double> vasla_scale(const ProbabilityVector& p,
                                const std::vector<std::size_t>& available) {
    if (available.empty())
        throw std::invalid_argument("vasla_scale: empty action subset");
    double mass = 0.0;
    for (std::size_t i : available) {
        if (i >= p.size()) throw std::out_of_range("vasla_scale: index out of range");
        mass += p[i];
    }
    if (mass <= 0.0)
        throw std::domain_error("vasla_scale: available actions carry zero probability mass");
    std::vector<double> scaled;
    scaled.reserve(available.size());
    for (std::size_t i : available) scaled.push_back(p[i] / mass);
    return scaled;
}

ProbabilityVector vsla_update(const ProbabilityVector& p, std::size_t chosen,
                              int signal, const UpdateScheme& scheme) {
    if (chosen >= p.size()) throw std::out_of_range("vsla_update: chosen out of range");
    const std::size_t r = p.size();
    std::vector<double> next(r);
    if (signal == 1) {
        for (std::size_t j = 0; j < r; ++j)
            next[j] = (j == chosen) ? p[j] + scheme.lambda1 * (1.0 - p[j])
                                    : (1.0 - scheme.lambda1) * p[j];
    } else if (signal == 0) {
        for (std::size_t j = 0; j < r; ++j)
            next[j] = (j == chosen)
                          ? (1.0 - scheme.lambda2) * p[j]
                          : scheme.lambda2 / static_cast<double>(r - 1) +
                                (1.0 - scheme.lambda2) * p[j];
    } else {
        throw std::invalid_argument("vsla_update: signal must be 0 or 1");
    }
    ProbabilityVector out(std::move(next));
    out.renormalize_if_drifted();
    return out;
}

ProbabilityVector vasla_update(const ProbabilityVector& p, std::size_t chosen,
                               double beta, const UpdateScheme& scheme,
                               std::size_t r) {
    if (chosen >= p.size()) throw std::out_of_range("vasla_update: chosen out of range");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("vasla_update: beta must lie in [0,1]");
    if (r < 2) throw std::invalid_argument("vasla_update: need at least two available actions");

    const double l1 = scheme.lambda1;
    const double l2 = scheme.lambda2;
    std::vector<double> next(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j == chosen) {
            next[j] = p[j] + l1 * beta * (1.0 - p[j]) - l2 * (1.0 - beta) * p[j];
        } else {
            next[j] = p[j] - l1 * beta * p[j] +
                      l2 * (1.0 - beta) * (1.0 / static_cast<double>(r - 1) - p[j]);
        }
    }
    ProbabilityVector out(std::move(next));
    out.renormalize_if_drifted();
    return out;
}

}  // namespace vdhla
