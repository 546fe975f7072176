#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vdhla/mining/chain.hpp"
#include "vdhla/mining/defense.hpp"

namespace vdhla::mining {

struct SimulationSpec {
    long total_blocks = 10000;
    double alpha = 0.3;  // selfish hash share, [0, 0.5)
    double gamma = 0.5;  // honest share racing on the selfish branch (tie-breaking)
    DefenseSpec defense;

    void validate() const;
};

struct SimulationResult {
    long main_chain_blocks = 0;
    long selfish_blocks = 0;
    double selfish_revenue = 0.0;
    double honest_revenue = 0.0;
    int final_k = 0;  // 0 for tie-breaking
    long weight_decisions = 0;
    long total_decisions = 0;
    double weight_decision_fraction = 0.0;
    long orphaned_blocks = 0;
};

// Two-pool proof-of-work simulation. Each tick mines one block (selfish with
// probability alpha). The selfish pool runs the classic withholding attack:
// it hides its branch, reveals a matching prefix whenever the honest chain
// grows underneath it, publishes everything once its private lead shrinks to
// one (or a tie), then races openly; it abandons when strictly behind. The
// honest pool follows the configured fork choice: plain longest chain with
// uniform tie-breaking, or the fail-safe length/weight rule re-evaluated on
// every public view change and at every tau boundary.
class Simulator {
public:
    Simulator(SimulationSpec spec, std::uint64_t seed);

    void step();
    bool done() const { return tick_ >= spec_.total_blocks; }
    SimulationResult finish();  // resolves any live fork, then tallies

    long tick() const { return tick_; }
    int fail_safe_k() const;
    const std::vector<Block>& blocks() const { return blocks_; }
    bool fork_visible() const;
    int public_honest_length() const { return static_cast<int>(honest_.size()); }
    int public_selfish_length() const { return static_cast<int>(published_); }

private:
    int new_block(int parent, Pool creator, long published);
    void mine_selfish();
    void mine_honest();
    void publish_prefix(std::size_t count);
    void on_view_change();
    void tau_boundary();
    void resolve_to_selfish();
    void resolve_to_honest();
    bool nik_decide();  // true when the fork resolved to the selfish branch
    std::vector<BranchTimes> public_branches() const;

    SimulationSpec spec_;
    Rng rng_;
    long tick_ = 0;

    std::vector<Block> blocks_;
    int base_;                  // last block both pools agree on
    std::vector<int> honest_;   // branch above base
    std::vector<int> selfish_;  // branch above base; prefix of size published_ is public
    std::size_t published_ = 0;
    bool open_race_ = false;

    std::optional<FailSafe> fail_safe_;
    bool view_dirty_ = false;
};

SimulationResult simulate(const SimulationSpec& spec, std::uint64_t seed);

}  // namespace vdhla::mining
