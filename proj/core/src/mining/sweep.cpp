#include "vdhla/mining/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "vdhla/experiment.hpp"  // ConfigError

namespace vdhla::mining {

using nlohmann::json;
using vdhla::exp::ConfigError;

void SweepSpec::validate() const {
    if (name.empty()) throw ConfigError("sweep name must be non-empty");
    if (alphas.empty()) throw ConfigError("alpha grid must be non-empty");
    for (double a : alphas)
        if (!(a >= 0.0 && a < 0.5)) throw ConfigError("alphas must lie in [0, 0.5)");
    if (seeds.empty()) throw ConfigError("at least one seed is required");
    if (blocks < 1) throw ConfigError("blocks must be >= 1");
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw ConfigError("gamma must lie in [0,1]");
    try {
        defense.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

SweepOutcome run_sweep(const SweepSpec& spec, unsigned parallelism) {
    spec.validate();

    SweepOutcome outcome;
    outcome.rows.reserve(spec.alphas.size() * spec.seeds.size());
    for (double alpha : spec.alphas)
        for (std::uint64_t seed : spec.seeds)
            outcome.rows.push_back(SweepRow{alpha, seed, {}});

    unsigned workers = parallelism ? parallelism : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(outcome.rows.size()));

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= outcome.rows.size()) return;
                SweepRow& row = outcome.rows[i];
                SimulationSpec sim;
                sim.total_blocks = spec.blocks;
                sim.alpha = row.alpha;
                sim.gamma = spec.gamma;
                sim.defense = spec.defense;
                row.result = simulate(sim, row.seed);
            }
        });
    }
    for (std::thread& t : pool) t.join();

    const std::size_t per_alpha = spec.seeds.size();
    for (std::size_t a = 0; a < spec.alphas.size(); ++a) {
        double sum = 0.0;
        for (std::size_t s = 0; s < per_alpha; ++s)
            sum += outcome.rows[a * per_alpha + s].result.selfish_revenue;
        outcome.mean_revenue.push_back(sum / static_cast<double>(per_alpha));
    }
    for (std::size_t a = 0; a < spec.alphas.size(); ++a) {
        if (outcome.mean_revenue[a] > spec.alphas[a]) {
            outcome.threshold = spec.alphas[a];
            break;
        }
    }
    return outcome;
}

void write_sweep_csv(const std::filesystem::path& path, const SweepSpec& spec,
                     const SweepOutcome& outcome) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    out << "defense,controller,alpha,seed,selfish_revenue,honest_revenue,final_K,"
           "weight_decision_fraction\n";
    char buf[160];
    for (const SweepRow& row : outcome.rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%llu,%.12g,%.12g,%d,%.12g", row.alpha,
                      static_cast<unsigned long long>(row.seed), row.result.selfish_revenue,
                      row.result.honest_revenue, row.result.final_k,
                      row.result.weight_decision_fraction);
        out << spec.defense.kind_name() << ',' << spec.defense.controller_name() << ','
            << buf << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string threshold_summary_json(const SweepSpec& spec, const SweepOutcome& outcome) {
    json j{{"name", spec.name},
           {"defense", spec.defense.kind_name()},
           {"controller", spec.defense.controller_name()},
           {"blocks", spec.blocks},
           {"seeds", spec.seeds.size()},
           {"alphas", spec.alphas},
           {"mean_selfish_revenue", outcome.mean_revenue}};
    if (spec.defense.kind == DefenseSpec::Kind::Nik) {
        j["lambda1"] = spec.defense.lambda1;
        j["lambda2"] = spec.defense.lambda2;
        j["k_min"] = spec.defense.k_min;
        j["k_max"] = spec.defense.k_max;
        j["tau"] = spec.defense.tau;
        j["theta_taus"] = spec.defense.theta_taus;
    }
    if (outcome.threshold)
        j["threshold"] = *outcome.threshold;
    else {
        j["threshold"] = nullptr;
        j["note"] = ">= grid max";
    }
    return j.dump(2);
}

namespace {

DefenseSpec parse_defense(const json& d) {
    DefenseSpec spec;
    const std::string kind = d.at("kind").get<std::string>();
    if (kind == "tie_breaking") {
        spec.kind = DefenseSpec::Kind::TieBreaking;
        return spec;
    }
    if (kind != "nik") throw ConfigError("unknown defense kind: " + kind);
    spec.kind = DefenseSpec::Kind::Nik;
    const std::string c = d.at("controller").get<std::string>();
    if (c == "fsla")
        spec.controller = DefenseSpec::Controller::Fsla;
    else if (c == "svdhla")
        spec.controller = DefenseSpec::Controller::Svdhla;
    else if (c == "avdhla")
        spec.controller = DefenseSpec::Controller::Avdhla;
    else
        throw ConfigError("unknown controller: " + c);
    spec.lambda1 = d.value("lambda1", 0.1);
    spec.lambda2 = d.value("lambda2", 0.01);
    spec.controller_depth =
        d.value("controller_depth", spec.controller == DefenseSpec::Controller::Fsla ? 2 : 1);
    spec.max_depth = d.value("max_depth", 20);
    spec.k_min = d.value("k_min", 1);
    spec.k_max = d.value("k_max", 5);
    spec.tau = d.value("tau", 5L);
    spec.theta_taus = d.value("theta_taus", 10);
    spec.weight_by_received = d.value("weight_by_received", false);
    return spec;
}

}  // namespace

SweepSpec parse_sweep_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }

    SweepSpec spec;
    try {
        spec.name = j.at("name").get<std::string>();
        spec.defense = parse_defense(j.at("defense"));
        const json& a = j.at("alphas");
        if (a.is_array()) {
            spec.alphas = a.get<std::vector<double>>();
        } else {
            const double start = a.at("start").get<double>();
            const double stop = a.at("stop").get<double>();
            const double step = a.at("step").get<double>();
            if (step <= 0.0) throw ConfigError("alpha step must be positive");
            for (long i = 0;; ++i) {
                const double v = start + step * static_cast<double>(i);
                if (v > stop + 1e-12) break;
                spec.alphas.push_back(v);
            }
        }
        spec.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        spec.blocks = j.value("blocks", 10000L);
        spec.gamma = j.value("gamma", 0.5);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
    spec.validate();
    return spec;
}

SweepSpec load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sweep_config(buf.str());
}

std::string normalized_sweep_json(const SweepSpec& spec) {
    json d{{"kind", spec.defense.kind_name()}};
    if (spec.defense.kind == DefenseSpec::Kind::Nik) {
        d["controller"] = spec.defense.controller_name();
        d["lambda1"] = spec.defense.lambda1;
        d["lambda2"] = spec.defense.lambda2;
        d["controller_depth"] = spec.defense.controller_depth;
        d["max_depth"] = spec.defense.max_depth;
        d["k_min"] = spec.defense.k_min;
        d["k_max"] = spec.defense.k_max;
        d["tau"] = spec.defense.tau;
        d["theta_taus"] = spec.defense.theta_taus;
        d["weight_by_received"] = spec.defense.weight_by_received;
    }
    json j{{"name", spec.name},  {"defense", d},      {"alphas", spec.alphas},
           {"seeds", spec.seeds}, {"blocks", spec.blocks}, {"gamma", spec.gamma}};
    return j.dump(2);
}

}  // namespace vdhla::mining
