#pragma once

#include <memory>
#include <optional>
#include <string>

#include "vdhla/automaton.hpp"

namespace vdhla::mining {

struct DefenseSpec {
    enum class Kind { TieBreaking, Nik };
    enum class Controller { Fsla, Svdhla, Avdhla };

    Kind kind = Kind::TieBreaking;

    // Nik parameters.
    Controller controller = Controller::Svdhla;
    double lambda1 = 0.1;
    double lambda2 = 0.01;
    int controller_depth = 1;  // FSLA controllers default to 2 via configs
    int max_depth = 20;
    int k_min = 1;
    int k_max = 5;
    long tau = 5;        // fork-check interval, in mined blocks
    int theta_taus = 10; // feedback interval, in tau units
    // Compare branch weights by publication instead of creation time.
    bool weight_by_received = false;

    void validate() const;
    std::string controller_name() const;
    std::string kind_name() const;
};

struct DecisionCounters {
    long weight_decisions = 0;
    long total_decisions = 0;
};

// Adaptive fail-safe state: the controller automaton picks Grow/Stop/Shrink
// for K at every tau boundary (bounds clamp a disallowed move to Stop) and
// is reinforced every theta with the weight-decision fraction.
class FailSafe {
public:
    explicit FailSafe(const DefenseSpec& spec);

    int k() const { return k_; }
    const DecisionCounters& window() const { return window_; }
    const DecisionCounters& totals() const { return totals_; }
    std::optional<double> last_beta() const { return last_beta_; }

    void record_decision(bool by_weight);
    void update_fail_safe(Rng& rng);

    // beta = weight / total over the theta window (0 when no decisions);
    // the P-model controller consumes it as a Bernoulli(beta) draw.
    void feedback(Rng& rng);

private:
    int k_;
    int k_min_;
    int k_max_;
    std::unique_ptr<Automaton> controller_;
    DecisionCounters window_;
    DecisionCounters totals_;
    std::optional<double> last_beta_;
};

std::unique_ptr<Automaton> make_controller(const DefenseSpec& spec);

}  // namespace vdhla::mining
