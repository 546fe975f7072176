#include "vdhla/mining/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace vdhla::mining {

std::vector<int> branch_weights(const std::vector<BranchTimes>& branches) {
    if (branches.size() < 2)
        throw std::invalid_argument("branch_weights: need at least two branches");
    std::vector<int> w(branches.size(), 0);
    int max_len = 0;
    for (const BranchTimes& b : branches) max_len = std::max(max_len, b.length());

    for (int h = 0; h < max_len; ++h) {
        std::size_t best = branches.size();
        long best_time = 0;
        int holders = 0;  // branches occupying this height
        bool tie = false;
        for (std::size_t i = 0; i < branches.size(); ++i) {
            if (h >= branches[i].length()) continue;
            const long t = branches[i].times[static_cast<std::size_t>(h)];
            ++holders;
            if (holders == 1 || t > best_time) {
                best = i;
                best_time = t;
                tie = false;
            } else if (t == best_time) {
                tie = true;
            }
        }
        if (holders >= 2 && !tie) ++w[best];
    }
    return w;
}

BranchChoice choose_branch(const std::vector<int>& lengths,
                           const std::vector<int>& weights, int fail_safe_k,
                           std::size_t current) {
    if (lengths.size() < 2 || lengths.size() != weights.size())
        throw std::invalid_argument("choose_branch: need matching lengths/weights for >= 2 branches");
    if (fail_safe_k < 1) throw std::invalid_argument("choose_branch: fail-safe must be >= 1");

    std::size_t longest = 0;
    for (std::size_t i = 1; i < lengths.size(); ++i)
        if (lengths[i] > lengths[longest]) longest = i;
    int second = 0;
    bool have_second = false;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i == longest) continue;
        if (!have_second || lengths[i] > second) second = lengths[i];
        have_second = true;
    }
    if (lengths[longest] - second > fail_safe_k) return {longest, true};

    std::size_t heaviest = 0;
    for (std::size_t i = 1; i < weights.size(); ++i)
        if (weights[i] > weights[heaviest]) heaviest = i;
    if (current < weights.size() && weights[current] == weights[heaviest])
        return {current, false};
    return {heaviest, false};
}

}  // namespace vdhla::mining
