#include "vdhla/experiment.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vdhla/fsla.hpp"
#include "vdhla/hybrid.hpp"
#include "vdhla/vsla.hpp"

namespace vdhla::exp {

using nlohmann::json;

namespace {

AutomatonSpec::Kind automaton_kind(const std::string& s) {
    if (s == "pure_chance") return AutomatonSpec::Kind::PureChance;
    if (s == "fsla") return AutomatonSpec::Kind::Fsla;
    if (s == "vsla") return AutomatonSpec::Kind::Vsla;
    if (s == "svdhla") return AutomatonSpec::Kind::Svdhla;
    if (s == "avdhla") return AutomatonSpec::Kind::Avdhla;
    throw ConfigError("unknown automaton kind: " + s);
}

std::string automaton_kind_name(AutomatonSpec::Kind k) {
    switch (k) {
        case AutomatonSpec::Kind::PureChance: return "pure_chance";
        case AutomatonSpec::Kind::Fsla: return "fsla";
        case AutomatonSpec::Kind::Vsla: return "vsla";
        case AutomatonSpec::Kind::Svdhla: return "svdhla";
        case AutomatonSpec::Kind::Avdhla: return "avdhla";
    }
    return "?";
}

EnvironmentSpec::Kind environment_kind(const std::string& s) {
    if (s == "stationary") return EnvironmentSpec::Kind::Stationary;
    if (s == "markov") return EnvironmentSpec::Kind::Markov;
    if (s == "state_dependent") return EnvironmentSpec::Kind::StateDependent;
    throw ConfigError("unknown environment kind: " + s);
}

std::string environment_kind_name(EnvironmentSpec::Kind k) {
    switch (k) {
        case EnvironmentSpec::Kind::Stationary: return "stationary";
        case EnvironmentSpec::Kind::Markov: return "markov";
        case EnvironmentSpec::Kind::StateDependent: return "state_dependent";
    }
    return "?";
}

env::Matrix parse_matrix(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw ConfigError(what + " must be a non-empty array of rows");
    env::Matrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw ConfigError(what + " rows must be arrays");
        m.push_back(row.get<std::vector<double>>());
    }
    return m;
}

std::vector<double> scalar_or_vector(const json& j, std::size_t n, const std::string& what) {
    if (j.is_number()) return std::vector<double>(n, j.get<double>());
    if (j.is_array()) {
        auto v = j.get<std::vector<double>>();
        if (v.size() != n) throw ConfigError(what + " length must match the action count");
        return v;
    }
    throw ConfigError(what + " must be a number or an array");
}

}  // namespace

void ExperimentConfig::validate() const {
    if (name.empty()) throw ConfigError("experiment name must be non-empty");
    if (iterations < 1) throw ConfigError("iterations must be >= 1");
    if (seeds.empty()) throw ConfigError("at least one seed is required");

    const auto& a = automaton;
    if (a.k < 1) throw ConfigError("automaton k must be >= 1");
    if (a.lambda1 < 0.0 || a.lambda1 > 1.0 || a.lambda2 < 0.0 || a.lambda2 > 1.0)
        throw ConfigError("lambda parameters must lie in [0,1]");
    const bool needs_depth = a.kind == AutomatonSpec::Kind::Fsla ||
                             a.kind == AutomatonSpec::Kind::Svdhla ||
                             a.kind == AutomatonSpec::Kind::Avdhla;
    if (needs_depth) {
        if (a.depths.empty()) throw ConfigError("depth (or depths) required for this automaton");
        if (a.depths.size() != 1 && a.depths.size() != static_cast<std::size_t>(a.k))
            throw ConfigError("depths must have one entry or one per action");
        for (int d : a.depths)
            if (d < 1) throw ConfigError("depths must be >= 1");
        if (a.kind != AutomatonSpec::Kind::Fsla) {
            if (a.max_depth < 1) throw ConfigError("max_depth must be >= 1");
            for (int d : a.depths)
                if (d > a.max_depth) throw ConfigError("initial depth exceeds max_depth");
        }
        if (a.kind == AutomatonSpec::Kind::Svdhla && a.depths.size() > 1) {
            for (int d : a.depths)
                if (d != a.depths[0]) throw ConfigError("svdhla requires equal initial depths");
        }
    }
    if ((a.kind == AutomatonSpec::Kind::Vsla || a.kind == AutomatonSpec::Kind::Svdhla ||
         a.kind == AutomatonSpec::Kind::Avdhla) &&
        a.k < 2)
        throw ConfigError("this automaton needs at least two actions");

    auto probe = make_environment(environment);  // dimension/stochasticity checks
    if (probe->action_count() != a.k)
        throw ConfigError("environment action count must match automaton k");
    if (favorable_action && (*favorable_action < 1 || *favorable_action > a.k))
        throw ConfigError("favorable_action out of range");
}

std::unique_ptr<Automaton> make_automaton(const AutomatonSpec& spec) {
    auto depths = [&](int k) {
        if (spec.depths.size() == 1)
            return std::vector<int>(static_cast<std::size_t>(k), spec.depths[0]);
        return spec.depths;
    };
    switch (spec.kind) {
        case AutomatonSpec::Kind::PureChance:
            return std::make_unique<PureChance>(spec.k);
        case AutomatonSpec::Kind::Fsla:
            return std::make_unique<Fsla>(spec.k, depths(spec.k));
        case AutomatonSpec::Kind::Vsla:
            return std::make_unique<Vsla>(spec.k, UpdateScheme(spec.lambda1, spec.lambda2));
        case AutomatonSpec::Kind::Svdhla:
            return std::make_unique<HybridAutomaton>(HybridAutomaton::svdhla(
                spec.k, spec.depths.at(0), spec.lambda1, spec.lambda2, spec.max_depth));
        case AutomatonSpec::Kind::Avdhla:
            return std::make_unique<HybridAutomaton>(HybridAutomaton::avdhla(
                spec.k, depths(spec.k), spec.lambda1, spec.lambda2, spec.max_depth));
    }
    throw ConfigError("unreachable automaton kind");
}

std::unique_ptr<env::Environment> make_environment(const EnvironmentSpec& spec) {
    try {
        switch (spec.kind) {
            case EnvironmentSpec::Kind::Stationary:
                return std::make_unique<env::StationaryEnv>(spec.reward_probs);
            case EnvironmentSpec::Kind::Markov:
                return std::make_unique<env::MarkovSwitchingEnv>(spec.transition, spec.reward,
                                                                 spec.initial_state);
            case EnvironmentSpec::Kind::StateDependent:
                return std::make_unique<env::StateDependentEnv>(spec.reward_probs, spec.theta,
                                                                spec.phi);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("environment: ") + e.what());
    }
    throw ConfigError("unreachable environment kind");
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }

    ExperimentConfig c;
    try {
        c.name = j.at("name").get<std::string>();

        const json& a = j.at("automaton");
        c.automaton.kind = automaton_kind(a.at("kind").get<std::string>());
        c.automaton.k = a.at("k").get<int>();
        if (a.contains("depths"))
            c.automaton.depths = a.at("depths").get<std::vector<int>>();
        else if (a.contains("depth"))
            c.automaton.depths = {a.at("depth").get<int>()};
        c.automaton.lambda1 = a.value("lambda1", 0.0);
        c.automaton.lambda2 = a.value("lambda2", 0.0);
        c.automaton.max_depth = a.value("max_depth", 20);

        const json& e = j.at("environment");
        c.environment.kind = environment_kind(e.at("kind").get<std::string>());
        switch (c.environment.kind) {
            case EnvironmentSpec::Kind::Stationary:
                c.environment.reward_probs = e.at("reward_probs").get<std::vector<double>>();
                break;
            case EnvironmentSpec::Kind::Markov:
                c.environment.transition = parse_matrix(e.at("transition"), "transition");
                c.environment.reward = parse_matrix(e.at("reward"), "reward");
                c.environment.initial_state = e.value("initial_state", 1);
                break;
            case EnvironmentSpec::Kind::StateDependent: {
                c.environment.reward_probs = e.at("reward_probs").get<std::vector<double>>();
                const std::size_t n = c.environment.reward_probs.size();
                c.environment.theta = scalar_or_vector(e.at("theta"), n, "theta");
                c.environment.phi = scalar_or_vector(e.at("phi"), n, "phi");
                break;
            }
        }

        c.iterations = j.at("iterations").get<long>();
        c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        if (j.contains("favorable_action"))
            c.favorable_action = j.at("favorable_action").get<int>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }

    c.validate();
    return c;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str());
}

std::string normalized_config_json(const ExperimentConfig& c) {
    json a{{"kind", automaton_kind_name(c.automaton.kind)}, {"k", c.automaton.k}};
    if (!c.automaton.depths.empty()) a["depths"] = c.automaton.depths;
    a["lambda1"] = c.automaton.lambda1;
    a["lambda2"] = c.automaton.lambda2;
    if (c.automaton.kind == AutomatonSpec::Kind::Svdhla ||
        c.automaton.kind == AutomatonSpec::Kind::Avdhla)
        a["max_depth"] = c.automaton.max_depth;

    json e{{"kind", environment_kind_name(c.environment.kind)}};
    switch (c.environment.kind) {
        case EnvironmentSpec::Kind::Stationary:
            e["reward_probs"] = c.environment.reward_probs;
            break;
        case EnvironmentSpec::Kind::Markov:
            e["transition"] = c.environment.transition;
            e["reward"] = c.environment.reward;
            e["initial_state"] = c.environment.initial_state;
            break;
        case EnvironmentSpec::Kind::StateDependent:
            e["reward_probs"] = c.environment.reward_probs;
            e["theta"] = c.environment.theta;
            e["phi"] = c.environment.phi;
            break;
    }

    json out{{"name", c.name},
             {"automaton", a},
             {"environment", e},
             {"iterations", c.iterations},
             {"seeds", c.seeds}};
    if (c.favorable_action) out["favorable_action"] = *c.favorable_action;
    return out.dump(2);
}

MetricsTrace run_trial(const ExperimentConfig& config, std::uint64_t seed) {
    auto automaton = make_automaton(config.automaton);
    auto environment = make_environment(config.environment);
    Rng rng = make_rng(seed);

    MetricsTrace trace(config.iterations);
    const bool fav_known = config.favorable_action.has_value();
    const int fav = config.favorable_action.value_or(0);
    for (long i = 0; i < config.iterations; ++i) {
        const int action = automaton->select_action(rng);
        const int signal = environment->respond(action, rng);
        trace.record(action, signal, fav_known, fav);
        automaton->update(signal);
    }
    return trace;
}

}  // namespace vdhla::exp
