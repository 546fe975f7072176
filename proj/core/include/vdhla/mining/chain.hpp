#pragma once

#include <cstddef>
#include <vector>

namespace vdhla::mining {

enum class Pool { Honest, Selfish };

// A mined block. Selfish blocks may be withheld: published stays kWithheld
// until release, and is never earlier than created.
struct Block {
    int id = 0;
    int parent = -1;
    int height = 0;  // genesis is 0
    Pool creator = Pool::Honest;
    long created = 0;
    long published = 0;
    static constexpr long kWithheld = -1;
};

// One competing branch at a fork, as a miner sees it: creation timestamps of
// its publicly visible blocks, ascending from the first block above the fork
// point.
struct BranchTimes {
    std::vector<long> times;
    int length() const { return static_cast<int>(times.size()); }
};

// Branch weights: at every height where at least two branches have a block,
// the strictly most recent timestamp earns +1; timestamp ties earn nothing.
std::vector<int> branch_weights(const std::vector<BranchTimes>& branches);

struct BranchChoice {
    std::size_t index = 0;
    bool by_length = false;  // false: weight decision
};

// Fail-safe rule: when the longest branch exceeds the runner-up by more than
// `fail_safe_k`, length decides; otherwise the heaviest branch wins. Weight
// ties keep `current` when it is among the heaviest, else the lowest index.
BranchChoice choose_branch(const std::vector<int>& lengths,
                           const std::vector<int>& weights, int fail_safe_k,
                           std::size_t current);

}  // namespace vdhla::mining
