// Acceptance gate: nine numbered criteria, one pass/fail line each.
// Run all: ./acceptance      Run one: ./acceptance --criterion N

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "vdhla/environment.hpp"
#include "vdhla/experiment.hpp"
#include "vdhla/fsla.hpp"
#include "vdhla/hybrid.hpp"
#include "vdhla/mining/sweep.hpp"
#include "vdhla/probability_vector.hpp"
#include "vdhla/vsla.hpp"

using namespace vdhla;

namespace {

struct Gate {
    bool all_pass = true;
    int checks = 0;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) all_pass = false;
        std::printf("    [%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
    }
    void note(const std::string& what) { std::printf("    [--] %s\n", what.c_str()); }
};

std::vector<std::uint64_t> seeds30() {
    std::vector<std::uint64_t> s;
    for (std::uint64_t i = 1; i <= 30; ++i) s.push_back(i);
    return s;
}

struct MeanMetrics {
    double tnr = 0.0;
    double tnas = 0.0;
    double p_favorable = 0.0;
};

MeanMetrics mean_metrics(const exp::ExperimentConfig& config) {
    MeanMetrics m;
    for (std::uint64_t seed : config.seeds) {
        const auto trace = exp::run_trial(config, seed);
        m.tnr += static_cast<double>(trace.tnr());
        m.tnas += static_cast<double>(trace.tnas());
        m.p_favorable += trace.p_favorable();
    }
    const double n = static_cast<double>(config.seeds.size());
    m.tnr /= n;
    m.tnas /= n;
    m.p_favorable /= n;
    return m;
}

exp::ExperimentConfig stationary_config(const std::string& name,
                                        exp::AutomatonSpec automaton,
                                        std::vector<double> reward_probs,
                                        long iterations, int favorable) {
    exp::ExperimentConfig c;
    c.name = name;
    c.automaton = std::move(automaton);
    c.environment.kind = exp::EnvironmentSpec::Kind::Stationary;
    c.environment.reward_probs = std::move(reward_probs);
    c.iterations = iterations;
    c.seeds = seeds30();
    c.favorable_action = favorable;
    return c;
}

exp::AutomatonSpec make_spec(exp::AutomatonSpec::Kind kind, int k, int depth,
                             double l1, double l2) {
    exp::AutomatonSpec a;
    a.kind = kind;
    a.k = k;
    a.depths = {depth};
    a.lambda1 = l1;
    a.lambda2 = l2;
    return a;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// ---------------------------------------------------------------------------
// 1. Exact/analytic steady-state and effective-stationary values.

void criterion_1(Gate& g) {
    const auto t0 = std::chrono::steady_clock::now();

    const env::Matrix d1t{{0.9, 0.1}, {0.1, 0.9}};
    const env::Matrix d2t{{0.2, 0.8}, {0.6, 0.4}};
    const env::Matrix exp2t{{0.3, 0.2, 0.1, 0.4},
                            {0.1, 0.2, 0.5, 0.2},
                            {0.2, 0.2, 0.2, 0.4},
                            {0.2, 0.5, 0.1, 0.2}};
    const env::Matrix ab{{0.8, 0.2}, {0.2, 0.8}};
    const env::Matrix cd{{0.8, 0.2}, {0.7, 0.3}};

    auto max_dev = [](const std::vector<double>& got, const std::vector<double>& want) {
        double m = 0.0;
        for (std::size_t i = 0; i < got.size(); ++i)
            m = std::max(m, std::fabs(got[i] - want[i]));
        return m;
    };

    g.check(max_dev(env::steady_state(d1t), {0.5, 0.5}) <= 0.005,
            "steady_state symmetric 2-state = [0.5, 0.5] within 0.005");
    g.check(max_dev(env::steady_state(d2t), {0.4286, 0.5714}) <= 0.005,
            "steady_state restless 2-state = [0.4286, 0.5714] within 0.005");

    const auto v2 = env::steady_state(exp2t);
    const double dev2 = max_dev(v2, {0.19, 0.28, 0.23, 0.28});
    g.check(dev2 <= 0.005,
            fmt("steady_state 4-state = [0.19, 0.28, 0.23, 0.28] within 0.005 "
                "(max dev %.6f)", dev2));
    g.note(fmt("the printed 4-state target sums to 0.98, so every distribution is "
               ">= 0.005 away; exact solution dev: %.2e against [4/21, 6/21, 5/21, 6/21]",
               max_dev(v2, {4.0 / 21.0, 6.0 / 21.0, 5.0 / 21.0, 6.0 / 21.0})));
    g.note(fmt("4-state values within the 0.01 rounding band: %s", 0.0) == ""
               ? ""
               : std::string("4-state values within the 0.01 rounding band: ") +
                     (dev2 <= 0.01 ? "yes" : "no"));

    g.check(max_dev(env::effective_stationary({d1t, ab}), {0.5, 0.5}) <= 0.005,
            "effective_stationary case 1 = [0.5, 0.5] within 0.005");
    g.check(max_dev(env::effective_stationary({d2t, ab}), {0.45, 0.54}) <= 0.01,
            "effective_stationary case 2 = [0.45, 0.54] within 0.01");
    g.check(max_dev(env::effective_stationary({d1t, cd}), {0.75, 0.25}) <= 0.005,
            "effective_stationary case 3 = [0.75, 0.25] within 0.005");
    g.check(max_dev(env::effective_stationary({d2t, cd}), {0.74, 0.26}) <= 0.01,
            "effective_stationary case 4 = [0.74, 0.26] within 0.01");

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    g.check(elapsed < 1.0, fmt("runtime %.3fs < 1s", elapsed));
}

// ---------------------------------------------------------------------------
// 2. Unit-exact controller values.

void criterion_2(Gate& g) {
    ProbabilityVector p({0.2, 0.2, 0.6});
    const auto q = vasla_update(p, 2, 0.0, UpdateScheme(0.0, 0.1), 3);
    g.check(std::fabs(q[0] - 0.23) <= 1e-12 && std::fabs(q[1] - 0.23) <= 1e-12 &&
                std::fabs(q[2] - 0.54) <= 1e-12,
            "penalty update [0.2, 0.2, 0.6] -> [0.23, 0.23, 0.54] exact to 1e-12");

    auto h = HybridAutomaton::svdhla(4, 2, 0.5, 0.5);
    Rng rng = make_rng(1);
    h.select_action(rng);
    h.update(1);
    h.select_action(rng);
    h.update(0);
    h.select_action(rng);
    h.update(0);
    g.check(h.last_controller_beta() && *h.last_controller_beta() == 1.0 / 3.0,
            "reward-penalty-switch trace grades the controller with exactly 1/3");
}

// ---------------------------------------------------------------------------
// 3. Learning capability against pure chance.

void criterion_3(Gate& g) {
    const std::vector<double> env{0.1, 0.9};
    const auto pc = mean_metrics(stationary_config(
        "pc", make_spec(exp::AutomatonSpec::Kind::PureChance, 2, 1, 0, 0), env, 1000, 2));
    g.note(fmt("pure chance: mean TNR %.1f, mean TNAS %.1f", pc.tnr, pc.tnas));

    for (auto kind : {exp::AutomatonSpec::Kind::Svdhla, exp::AutomatonSpec::Kind::Avdhla}) {
        const char* name = kind == exp::AutomatonSpec::Kind::Svdhla ? "svdhla" : "avdhla";
        for (int depth : {1, 4, 6}) {
            const auto m = mean_metrics(stationary_config(
                name, make_spec(kind, 2, depth, 0.1, 0.01), env, 1000, 2));
            g.check(m.tnr >= pc.tnr + 200.0,
                    fmt((std::string(name) + " depth %.0f: mean TNR %.1f beats pure chance by >= 200").c_str(),
                        depth, m.tnr));
            g.check(m.tnas * 5.0 <= pc.tnas,
                    fmt((std::string(name) + " depth %.0f: mean TNAS %.1f at most a fifth of pure chance").c_str(),
                        depth, m.tnas));
        }
    }
}

// ---------------------------------------------------------------------------
// 4. Bands against the fixed-structure baseline.

void criterion_4(Gate& g) {
    std::vector<double> env{0.8};
    for (int i = 0; i < 8; ++i) env.push_back(0.2 / 8.0);

    const auto svdhla_n1 = mean_metrics(stationary_config(
        "svdhla_n1", make_spec(exp::AutomatonSpec::Kind::Svdhla, 9, 1, 0.1, 0.0), env, 1000, 1));
    g.check(svdhla_n1.tnr >= 750.0 && svdhla_n1.tnr <= 850.0,
            fmt("svdhla(9,1) mean TNR %.1f in [750, 850]", svdhla_n1.tnr));
    g.check(svdhla_n1.tnas <= 120.0, fmt("svdhla(9,1) mean TNAS %.1f <= 120", svdhla_n1.tnas));

    const auto fsla_n1 = mean_metrics(stationary_config(
        "fsla_n1", make_spec(exp::AutomatonSpec::Kind::Fsla, 9, 1, 0, 0), env, 1000, 1));
    g.check(fsla_n1.tnr >= 240.0 && fsla_n1.tnr <= 360.0,
            fmt("fsla(9,1) mean TNR %.1f in [240, 360]", fsla_n1.tnr));
    g.check(fsla_n1.tnas >= 600.0, fmt("fsla(9,1) mean TNAS %.1f >= 600", fsla_n1.tnas));

    for (int depth : {1, 3, 5, 7}) {
        const auto s = mean_metrics(stationary_config(
            "s", make_spec(exp::AutomatonSpec::Kind::Svdhla, 9, depth, 0.1, 0.0), env, 1000, 1));
        const auto f = mean_metrics(stationary_config(
            "f", make_spec(exp::AutomatonSpec::Kind::Fsla, 9, depth, 0, 0), env, 1000, 1));
        g.check(s.tnr > f.tnr,
                fmt("depth %.0f: svdhla mean TNR %.1f > fsla %.1f", depth, s.tnr, f.tnr));
    }
}

// ---------------------------------------------------------------------------
// 5. Ordering against the variable-structure baseline.

void criterion_5(Gate& g) {
    const std::vector<double> env{0.8, 0.05, 0.05, 0.05, 0.05};
    struct Col {
        const char* label;
        double l1, l2;
    };
    for (const Col col : {Col{"pure chance", 0.0, 0.0}, Col{"penalty-inaction 0.1", 0.0, 0.1},
                          Col{"penalty-inaction 0.01", 0.0, 0.01},
                          Col{"reward-eps-penalty 0.01/0.001", 0.01, 0.001}}) {
        const auto hybrid = mean_metrics(stationary_config(
            "h", make_spec(exp::AutomatonSpec::Kind::Svdhla, 5, 5, col.l1, col.l2), env, 1000, 1));
        const auto vsla = mean_metrics(stationary_config(
            "v", make_spec(exp::AutomatonSpec::Kind::Vsla, 5, 1, col.l1, col.l2), env, 1000, 1));
        g.check(hybrid.tnr >= vsla.tnr + 100.0,
                fmt((std::string(col.label) + ": svdhla mean TNR %.1f >= vsla %.1f + 100").c_str(),
                    hybrid.tnr, vsla.tnr));
    }
}

// ---------------------------------------------------------------------------
// 6. Degeneration to the fixed-structure automaton.

void criterion_6(Gate& g) {
    {
        auto h = HybridAutomaton::svdhla(2, 1, 0.0, 0.0);
        Rng rng = make_rng(7);
        env::StationaryEnv world({0.4, 0.6});
        long switches = 0;
        bool constant = true;
        while (switches < 10000) {
            const int action = h.select_action(rng);
            const int signal = world.respond(action, rng);
            const bool switching = h.fsla().is_action_switching(signal);
            h.update(signal);
            if (switching) {
                ++switches;
                const auto& p = h.controller().probabilities();
                if (!(p[0] == 1.0 / 3.0 && p[1] == 1.0 / 3.0 && p[2] == 1.0 / 3.0))
                    constant = false;
            }
        }
        g.check(constant, "pure-chance controller vector bitwise constant over 10^4 switches");
    }
    {
        auto h = HybridAutomaton::svdhla(3, 2, 0.0, 0.0);
        h.freeze_depth(true);
        Fsla f(3, 2);
        Rng ra = make_rng(11), rb = make_rng(11);
        env::StationaryEnv ea({0.3, 0.6, 0.9}), eb({0.3, 0.6, 0.9});
        bool identical = true;
        for (int i = 0; i < 10000 && identical; ++i) {
            const int x = h.select_action(ra);
            const int y = f.select_action(rb);
            const int sx = ea.respond(x, ra);
            const int sy = eb.respond(y, rb);
            identical = x == y && sx == sy;
            h.update(sx);
            f.update(sy);
            identical = identical && h.fsla().state() == f.state();
        }
        g.check(identical, "stop-only depth policy walks the exact Tsetlin trajectory");
    }
}

// ---------------------------------------------------------------------------
// 7. Property suites.

void criterion_7(Gate& g) {
    {
        Rng rng = make_rng(21);
        std::vector<double> w{0.1, 0.2, 0.3, 0.4};
        ProbabilityVector p(w);
        bool ok = true;
        for (long step = 0; step < 1000000 && ok; ++step) {
            const std::size_t chosen = next_index(rng, p.size());
            const UpdateScheme scheme(next_double(rng), next_double(rng));
            if (step % 2 == 0)
                p = vsla_update(p, chosen, static_cast<int>(step % 4 < 2), scheme);
            else
                p = vasla_update(p, chosen, next_double(rng), scheme, p.size());
            ok = std::fabs(p.sum() - 1.0) < 1e-9;
        }
        g.check(ok, "probability normalization within 1e-9 over 10^6 random updates");
    }
    {
        Fsla f(5, std::vector<int>{1, 4, 2, 6, 3});
        Rng rng = make_rng(22);
        bool ok = true;
        for (long step = 0; step < 1000000 && ok; ++step) {
            f.update(bernoulli(rng, 0.5) ? 1 : 0);
            ok = f.state().position >= 1 && f.state().position <= f.depth(f.current_action());
        }
        g.check(ok, "fsla position bounds over 10^6 random signals");
    }
    {
        auto h = HybridAutomaton::avdhla(3, {1, 2, 3}, 0.3, 0.2, 4);
        Rng rng = make_rng(23);
        env::StationaryEnv world({0.2, 0.5, 0.8});
        bool depth_ok = true, beta_ok = true;
        for (long step = 0; step < 1000000; ++step) {
            const int action = h.select_action(rng);
            h.update(world.respond(action, rng));
            for (int a = 1; a <= 3; ++a) {
                const int d = h.depth_of(a);
                if (d < 1 || d > 4) depth_ok = false;
            }
            if (h.last_controller_beta() &&
                !(*h.last_controller_beta() >= 0.0 && *h.last_controller_beta() <= 1.0))
                beta_ok = false;
        }
        g.check(depth_ok, "hybrid depth bounds [1, max_depth] over 10^6 steps");
        g.check(beta_ok, "controller reinforcement in [0,1] at every switch");
    }
    {
        Rng rng = make_rng(24);
        bool ok = true;
        for (int trial = 0; trial < 10000 && ok; ++trial) {
            const std::size_t n = 2 + next_index(rng, 5);
            std::vector<double> w(n);
            double sum = 0.0;
            for (double& x : w) {
                x = next_double(rng) + 1e-9;
                sum += x;
            }
            for (double& x : w) x /= sum;
            ProbabilityVector p(w);
            const std::size_t chosen = next_index(rng, n);
            const UpdateScheme scheme(next_double(rng), next_double(rng));
            const int beta = trial % 2;
            const auto a = vasla_update(p, chosen, beta, scheme, n);
            const auto b = vsla_update(p, chosen, beta, scheme);
            for (std::size_t i = 0; i < n; ++i)
                if (std::fabs(a[i] - b[i]) >= 1e-12) ok = false;
        }
        g.check(ok, "variable-action-set update reduces to the plain rule at beta in {0,1}");
    }
    {
        env::StateDependentEnv world({0.95, 0.02, 0.5}, 0.001, 0.002);
        Rng rng = make_rng(25);
        bool ok = true;
        for (long step = 0; step < 1000000 && ok; ++step) {
            world.respond(1 + static_cast<int>(next_index(rng, 3)), rng);
            for (double d : world.reward_probs())
                if (!(d >= 0.0 && d <= 1.0)) ok = false;
        }
        g.check(ok, "state-dependent drift stays in [0,1] over 10^6 steps");
    }
}

// ---------------------------------------------------------------------------
// 8. Selfish-mining thresholds.

mining::SweepSpec sweep_base(const std::string& name) {
    mining::SweepSpec spec;
    spec.name = name;
    for (int i = 1; i <= 49; ++i) spec.alphas.push_back(i / 100.0);
    spec.seeds = seeds30();
    spec.blocks = 10000;
    spec.gamma = 0.5;
    return spec;
}

double threshold_or_grid_max(const mining::SweepOutcome& outcome) {
    return outcome.threshold.value_or(0.50);
}

void criterion_8(Gate& g) {
    const auto t0 = std::chrono::steady_clock::now();

    auto tie = sweep_base("tie_breaking");
    tie.defense.kind = mining::DefenseSpec::Kind::TieBreaking;
    const double tie_thr = threshold_or_grid_max(mining::run_sweep(tie));
    g.check(std::fabs(tie_thr - 0.25) <= 0.03,
            fmt("tie-breaking threshold %.2f = 0.25 +- 0.03", tie_thr));

    auto nik = [&](mining::DefenseSpec::Controller c, const char* name) {
        auto spec = sweep_base(name);
        spec.defense.kind = mining::DefenseSpec::Kind::Nik;
        spec.defense.controller = c;
        spec.defense.lambda1 = 0.1;
        spec.defense.lambda2 = 0.01;
        spec.defense.controller_depth =
            c == mining::DefenseSpec::Controller::Fsla ? 2 : 1;
        return threshold_or_grid_max(mining::run_sweep(spec));
    };
    const double fsla_thr = nik(mining::DefenseSpec::Controller::Fsla, "nik_fsla");
    const double svdhla_thr = nik(mining::DefenseSpec::Controller::Svdhla, "nik_svdhla");
    const double avdhla_thr = nik(mining::DefenseSpec::Controller::Avdhla, "nik_avdhla");

    g.check(svdhla_thr >= 0.40, fmt("nik(svdhla) threshold %.2f >= 0.40", svdhla_thr));
    g.check(avdhla_thr >= 0.40, fmt("nik(avdhla) threshold %.2f >= 0.40", avdhla_thr));
    g.check(fsla_thr >= 0.33, fmt("nik(fsla) threshold %.2f >= 0.33", fsla_thr));
    g.check(svdhla_thr >= fsla_thr && avdhla_thr >= fsla_thr,
            fmt("ordering: nik(vdhla) %.2f/%.2f >= nik(fsla) %.2f", svdhla_thr, avdhla_thr,
                fsla_thr));
    g.check(fsla_thr > tie_thr,
            fmt("ordering: nik(fsla) %.2f > tie-breaking %.2f", fsla_thr, tie_thr));

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    g.check(elapsed < 600.0, fmt("full sweep runtime %.1fs < 600s", elapsed));
}

// ---------------------------------------------------------------------------
// 9. Decision-cadence trends.

double mean_revenue_at(double alpha, long tau, int theta_taus) {
    mining::SweepSpec spec;
    spec.name = "trend";
    spec.defense.kind = mining::DefenseSpec::Kind::Nik;
    spec.defense.controller = mining::DefenseSpec::Controller::Svdhla;
    spec.defense.lambda1 = 0.1;
    spec.defense.lambda2 = 0.01;
    spec.defense.controller_depth = 1;
    spec.defense.k_min = 1;
    spec.defense.k_max = 3;
    spec.defense.tau = tau;
    spec.defense.theta_taus = theta_taus;
    spec.alphas = {0.35};
    spec.seeds = seeds30();
    spec.blocks = 10000;
    return mining::run_sweep(spec).mean_revenue[0];
}

void criterion_9(Gate& g) {
    const double tau5 = mean_revenue_at(0.35, 5, 10);
    const double tau18 = mean_revenue_at(0.35, 18, 10);
    g.check(tau5 <= tau18,
            fmt("shorter fork-check interval does not pay the attacker: "
                "rev(tau=5) %.4f <= rev(tau=18) %.4f", tau5, tau18));

    const double theta6 = mean_revenue_at(0.35, 5, 6);
    const double theta18 = mean_revenue_at(0.35, 5, 18);
    g.check(theta6 <= theta18,
            fmt("shorter feedback interval does not pay the attacker: "
                "rev(theta=6tau) %.4f <= rev(theta=18tau) %.4f", theta6, theta18));
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
    }

    struct Entry {
        int id;
        const char* title;
        std::function<void(Gate&)> run;
    };
    const std::vector<Entry> entries{
        {1, "analytic steady-state values", criterion_1},
        {2, "unit-exact controller values", criterion_2},
        {3, "learning capability vs pure chance", criterion_3},
        {4, "bands vs the fixed-structure baseline", criterion_4},
        {5, "ordering vs the variable-structure baseline", criterion_5},
        {6, "degeneration to the fixed-structure automaton", criterion_6},
        {7, "property suites", criterion_7},
        {8, "selfish-mining thresholds", criterion_8},
        {9, "decision-cadence trends", criterion_9},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        if (only != 0 && e.id != only) continue;
        std::printf("criterion %d: %s\n", e.id, e.title);
        Gate gate;
        e.run(gate);
        std::printf("criterion %d: %s — %s\n", e.id, gate.all_pass ? "PASS" : "FAIL", e.title);
        if (!gate.all_pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
