#include "vdhla/mining/simulator.hpp"

#include <cassert>
#include <stdexcept>

namespace vdhla::mining {

void SimulationSpec::validate() const {
    if (total_blocks < 1) throw std::invalid_argument("SimulationSpec: total_blocks must be >= 1");
    if (!(alpha >= 0.0 && alpha < 0.5))
        throw std::invalid_argument("SimulationSpec: alpha must lie in [0, 0.5)");
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("SimulationSpec: gamma must lie in [0,1]");
    defense.validate();
}

Simulator::Simulator(SimulationSpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), rng_(make_rng(seed)) {
    spec_.validate();
    blocks_.push_back(Block{0, -1, 0, Pool::Honest, 0, 0});  // genesis
    base_ = 0;
    if (spec_.defense.kind == DefenseSpec::Kind::Nik) fail_safe_.emplace(spec_.defense);
}

int Simulator::new_block(int parent, Pool creator, long published) {
    const int id = static_cast<int>(blocks_.size());
    blocks_.push_back(Block{id, parent, blocks_[static_cast<std::size_t>(parent)].height + 1,
                            creator, tick_, published});
    return id;
}

bool Simulator::fork_visible() const {
    return published_ >= 1 && !honest_.empty();
}

int Simulator::fail_safe_k() const { return fail_safe_ ? fail_safe_->k() : 0; }

void Simulator::publish_prefix(std::size_t count) {
    for (std::size_t i = published_; i < count && i < selfish_.size(); ++i) {
        blocks_[static_cast<std::size_t>(selfish_[i])].published = tick_;
        view_dirty_ = true;
    }
    if (count > published_) published_ = std::min(count, selfish_.size());
}

void Simulator::mine_selfish() {
    // A fresh attack forks off the agreed tip; an ongoing one extends the
    // private branch.
    const int parent = selfish_.empty() ? base_ : selfish_.back();
    const int id = new_block(parent, Pool::Selfish,
                             open_race_ ? tick_ : Block::kWithheld);
    selfish_.push_back(id);
    if (open_race_) {
        published_ = selfish_.size();
        view_dirty_ = true;
    }
}

void Simulator::mine_honest() {
    // During a published equal-length race under tie-breaking, the honest
    // pool is split: a gamma share extends the selfish branch.
    const bool race_split = spec_.defense.kind == DefenseSpec::Kind::TieBreaking &&
                            open_race_ && fork_visible() &&
                            static_cast<int>(published_) == static_cast<int>(honest_.size()) &&
                            bernoulli(rng_, spec_.gamma);
    if (race_split) {
        const int id = new_block(selfish_.back(), Pool::Honest, tick_);
        selfish_.push_back(id);
        published_ = selfish_.size();
        view_dirty_ = true;
        return;
    }

    const int parent = honest_.empty() ? base_ : honest_.back();
    const int id = new_block(parent, Pool::Honest, tick_);
    view_dirty_ = true;
    if (selfish_.empty()) {
        base_ = id;  // no fork in progress, the chain simply grows
        return;
    }
    honest_.push_back(id);

    // Selfish reaction to the honest branch growing.
    const int lead = static_cast<int>(selfish_.size()) - static_cast<int>(honest_.size());
    if (open_race_) {
        if (lead < 0) resolve_to_honest();
        return;
    }
    if (lead < 0) {
        resolve_to_honest();
    } else if (lead <= 1) {
        publish_prefix(selfish_.size());
        open_race_ = true;
    } else {
        publish_prefix(honest_.size());
    }
}

void Simulator::resolve_to_honest() {
    if (!honest_.empty()) base_ = honest_.back();
    honest_.clear();
    selfish_.clear();
    published_ = 0;
    open_race_ = false;
    view_dirty_ = true;
}

void Simulator::resolve_to_selfish() {
    assert(published_ >= 1);
    base_ = selfish_[published_ - 1];
    honest_.clear();
    // Unpublished surplus becomes a fresh covert fork above the new base.
    std::vector<int> surplus(selfish_.begin() + static_cast<long>(published_), selfish_.end());
    selfish_ = std::move(surplus);
    published_ = 0;
    open_race_ = false;
    view_dirty_ = true;
}

std::vector<BranchTimes> Simulator::public_branches() const {
    std::vector<BranchTimes> branches(2);
    for (int id : honest_) {
        const Block& b = blocks_[static_cast<std::size_t>(id)];
        branches[0].times.push_back(spec_.defense.weight_by_received ? b.published : b.created);
    }
    for (std::size_t i = 0; i < published_; ++i) {
        const Block& b = blocks_[static_cast<std::size_t>(selfish_[i])];
        branches[1].times.push_back(spec_.defense.weight_by_received ? b.published : b.created);
    }
    return branches;
}

bool Simulator::nik_decide() {
    const std::vector<BranchTimes> branches = public_branches();
    const std::vector<int> lengths{branches[0].length(), branches[1].length()};
    const std::vector<int> weights = branch_weights(branches);
    // The honest pool mines its own branch between decisions, so branch 0 is
    // the status quo for weight ties.
    const BranchChoice choice = choose_branch(lengths, weights, fail_safe_->k(), 0);
    fail_safe_->record_decision(!choice.by_length);
    if (choice.index == 1) {
        resolve_to_selfish();
        return true;
    }
    return false;
}

void Simulator::on_view_change() {
    if (!fork_visible()) return;
    if (spec_.defense.kind == DefenseSpec::Kind::TieBreaking) {
        // Plain longest chain; equal lengths stay split until the race ends.
        if (static_cast<int>(published_) > static_cast<int>(honest_.size()))
            resolve_to_selfish();
    } else {
        nik_decide();
    }
}

void Simulator::tau_boundary() {
    if (fork_visible()) nik_decide();
    const long taus = tick_ / spec_.defense.tau;
    if (taus % spec_.defense.theta_taus == 0) fail_safe_->feedback(rng_);
    fail_safe_->update_fail_safe(rng_);
}

void Simulator::step() {
    if (done()) return;
    ++tick_;
    if (bernoulli(rng_, spec_.alpha))
        mine_selfish();
    else
        mine_honest();

    if (view_dirty_) {
        view_dirty_ = false;
        on_view_change();
    }
    if (fail_safe_ && tick_ % spec_.defense.tau == 0) tau_boundary();
}

SimulationResult Simulator::finish() {
    while (!done()) step();

    // Nothing left to gain from withholding: reveal and resolve.
    if (!selfish_.empty()) {
        publish_prefix(selfish_.size());
        open_race_ = true;
        if (honest_.empty()) {
            resolve_to_selfish();
        } else if (spec_.defense.kind == DefenseSpec::Kind::TieBreaking) {
            if (static_cast<int>(published_) > static_cast<int>(honest_.size()))
                resolve_to_selfish();
            else
                resolve_to_honest();
        } else {
            const std::vector<BranchTimes> branches = public_branches();
            const std::vector<int> lengths{branches[0].length(), branches[1].length()};
            const std::vector<int> weights = branch_weights(branches);
            if (choose_branch(lengths, weights, fail_safe_->k(), 0).index == 1)
                resolve_to_selfish();
            else
                resolve_to_honest();
        }
        if (!selfish_.empty()) resolve_to_honest();  // leftover surplus is forfeit
    } else if (!honest_.empty()) {
        resolve_to_honest();
    }

    SimulationResult r;
    for (int id = base_; id > 0; id = blocks_[static_cast<std::size_t>(id)].parent) {
        ++r.main_chain_blocks;
        if (blocks_[static_cast<std::size_t>(id)].creator == Pool::Selfish) ++r.selfish_blocks;
    }
    if (r.main_chain_blocks > 0) {
        r.selfish_revenue =
            static_cast<double>(r.selfish_blocks) / static_cast<double>(r.main_chain_blocks);
        r.honest_revenue = 1.0 - r.selfish_revenue;
    }
    r.final_k = fail_safe_k();
    if (fail_safe_) {
        r.weight_decisions = fail_safe_->totals().weight_decisions;
        r.total_decisions = fail_safe_->totals().total_decisions;
        if (r.total_decisions > 0)
            r.weight_decision_fraction =
                static_cast<double>(r.weight_decisions) / static_cast<double>(r.total_decisions);
    }
    r.orphaned_blocks = static_cast<long>(blocks_.size()) - 1 - r.main_chain_blocks;
    return r;
}

SimulationResult simulate(const SimulationSpec& spec, std::uint64_t seed) {
    Simulator sim(spec, seed);
    return sim.finish();
}

}  // namespace vdhla::mining
