#include "vdhla/mining/defense.hpp"

#include <stdexcept>
#include <vector>

#include "vdhla/fsla.hpp"
#include "vdhla/hybrid.hpp"

namespace vdhla::mining {

namespace {
enum : int { kGrow = 1, kStop = 2, kShrink = 3 };  // controller actions, 1-based
}

void DefenseSpec::validate() const {
    if (kind == Kind::TieBreaking) return;
    if (lambda1 < 0.0 || lambda1 > 1.0 || lambda2 < 0.0 || lambda2 > 1.0)
        throw std::invalid_argument("DefenseSpec: lambda parameters must lie in [0,1]");
    if (controller_depth < 1) throw std::invalid_argument("DefenseSpec: controller depth must be >= 1");
    if (max_depth < controller_depth)
        throw std::invalid_argument("DefenseSpec: max_depth below controller depth");
    if (k_min < 1 || k_max < k_min)
        throw std::invalid_argument("DefenseSpec: need 1 <= k_min <= k_max");
    if (tau < 1) throw std::invalid_argument("DefenseSpec: tau must be >= 1");
    if (theta_taus < 1) throw std::invalid_argument("DefenseSpec: theta_taus must be >= 1");
}

std::string DefenseSpec::controller_name() const {
    if (kind == Kind::TieBreaking) return "none";
    switch (controller) {
        case Controller::Fsla: return "fsla";
        case Controller::Svdhla: return "svdhla";
        case Controller::Avdhla: return "avdhla";
    }
    return "?";
}

std::string DefenseSpec::kind_name() const {
    return kind == Kind::TieBreaking ? "tie_breaking" : "nik";
}

std::unique_ptr<Automaton> make_controller(const DefenseSpec& spec) {
    switch (spec.controller) {
        case DefenseSpec::Controller::Fsla:
            return std::make_unique<Fsla>(3, spec.controller_depth);
        case DefenseSpec::Controller::Svdhla:
            return std::make_unique<HybridAutomaton>(HybridAutomaton::svdhla(
                3, spec.controller_depth, spec.lambda1, spec.lambda2, spec.max_depth));
        case DefenseSpec::Controller::Avdhla:
            return std::make_unique<HybridAutomaton>(HybridAutomaton::avdhla(
                3, std::vector<int>(3, spec.controller_depth), spec.lambda1, spec.lambda2,
                spec.max_depth));
    }
    throw std::invalid_argument("make_controller: unknown controller");
}

FailSafe::FailSafe(const DefenseSpec& spec)
    : k_(spec.k_min), k_min_(spec.k_min), k_max_(spec.k_max),
      controller_(make_controller(spec)) {}

void FailSafe::record_decision(bool by_weight) {
    if (by_weight) {
        ++window_.weight_decisions;
        ++totals_.weight_decisions;
    }
    ++window_.total_decisions;
    ++totals_.total_decisions;
}

void FailSafe::update_fail_safe(Rng& rng) {
    const int choice = controller_->select_action(rng);
    // A move outside [k_min, k_max] degrades to Stop.
    if (choice == kGrow && k_ < k_max_)
        ++k_;
    else if (choice == kShrink && k_ > k_min_)
        --k_;
}

void FailSafe::feedback(Rng& rng) {
    const double beta =
        window_.total_decisions > 0
            ? static_cast<double>(window_.weight_decisions) /
                  static_cast<double>(window_.total_decisions)
            : 0.0;
    last_beta_ = beta;
    controller_->update(bernoulli(rng, beta) ? 1.0 : 0.0);
    window_ = DecisionCounters{};
}

}  // namespace vdhla::mining
