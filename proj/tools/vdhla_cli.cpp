// Command line front end: experiment runs, the Markov steady-state analyzer,
// selfish-mining sweeps, and config validation.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vdhla/environment.hpp"
#include "vdhla/experiment.hpp"
#include "vdhla/mining/sweep.hpp"
#include "vdhla/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::vector<std::uint64_t> seed_range(unsigned n) {
    std::vector<std::uint64_t> seeds;
    for (unsigned i = 1; i <= n; ++i) seeds.push_back(i);
    return seeds;
}

vdhla::env::Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw vdhla::exp::ConfigError("cannot open matrix file: " + path);
    vdhla::env::Matrix m;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<double> values;
        double v;
        while (row >> v) values.push_back(v);
        if (!row.eof() && row.fail())
            throw vdhla::exp::ConfigError("matrix file has a non-numeric entry: " + path);
        if (!values.empty()) m.push_back(std::move(values));
    }
    if (m.empty()) throw vdhla::exp::ConfigError("matrix file is empty: " + path);
    return m;
}

void print_vector(const std::vector<double>& v) {
    char buf[40];
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6f", v[i]);
        std::cout << (i ? " " : "") << buf;
    }
    std::cout << '\n';
}

struct CommonOpts {
    std::string config;
    std::string out = "out";
    unsigned seeds = 0;      // 0 keeps the config's seed list
    unsigned parallelism = 0;
    bool dry_run = false;
};

int cmd_run_experiment(const CommonOpts& opt) {
    auto config = vdhla::exp::load_experiment_config(opt.config);
    if (opt.seeds > 0) config.seeds = seed_range(opt.seeds);
    config.validate();
    if (opt.dry_run) {
        std::cout << vdhla::exp::normalized_config_json(config) << '\n';
        return kExitOk;
    }
    const auto result = vdhla::exp::run_suite({config}, opt.out, opt.parallelism);
    for (const auto& s : result.summaries) {
        std::printf("%s: mean_tnr=%.2f std_tnr=%.2f mean_tnas=%.2f std_tnas=%.2f "
                    "mean_p_favorable=%.4f (%ld seeds)\n",
                    s.name.c_str(), s.tnr.mean, s.tnr.stddev, s.tnas.mean, s.tnas.stddev,
                    s.mean_p_favorable, s.seeds);
    }
    std::cout << "wrote " << result.written_files.size() << " files under " << opt.out << '\n';
    return kExitOk;
}

int cmd_steady_state(const std::string& matrix_path, bool dry_run) {
    const auto t = read_matrix_file(matrix_path);
    if (dry_run) {
        std::cout << "matrix " << t.size() << "x" << (t.empty() ? 0 : t[0].size())
                  << " parsed\n";
        return kExitOk;
    }
    print_vector(vdhla::env::steady_state(t));
    return kExitOk;
}

int cmd_selfish_sweep(const CommonOpts& opt) {
    auto spec = vdhla::mining::load_sweep_config(opt.config);
    if (opt.seeds > 0) spec.seeds = seed_range(opt.seeds);
    spec.validate();
    if (opt.dry_run) {
        std::cout << vdhla::mining::normalized_sweep_json(spec) << '\n';
        return kExitOk;
    }
    const auto outcome = vdhla::mining::run_sweep(spec, opt.parallelism);

    std::filesystem::create_directories(opt.out);
    const std::filesystem::path csv = std::filesystem::path(opt.out) / (spec.name + ".csv");
    vdhla::mining::write_sweep_csv(csv, spec, outcome);
    const std::filesystem::path summary =
        std::filesystem::path(opt.out) / (spec.name + "_threshold.json");
    std::ofstream out(summary, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + summary.string());
    out << vdhla::mining::threshold_summary_json(spec, outcome) << '\n';

    if (outcome.threshold)
        std::printf("%s: threshold=%.2f\n", spec.name.c_str(), *outcome.threshold);
    else
        std::printf("%s: threshold >= grid max\n", spec.name.c_str());
    return kExitOk;
}

int cmd_validate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw vdhla::exp::ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    // A config is either an experiment or a sweep; try both before failing.
    try {
        const auto config = vdhla::exp::parse_experiment_config(text);
        std::cout << vdhla::exp::normalized_config_json(config) << '\n';
        return kExitOk;
    } catch (const vdhla::exp::ConfigError&) {
    }
    const auto spec = vdhla::mining::parse_sweep_config(text);
    std::cout << vdhla::mining::normalized_sweep_json(spec) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"learning automata workbench"};
    app.require_subcommand(1);

    CommonOpts run_opt;
    auto* run = app.add_subcommand("run-experiment", "run one experiment config");
    run->add_option("config", run_opt.config, "experiment config (json)")->required();
    run->add_option("--config", run_opt.config, "experiment config (json)");
    run->add_option("--out", run_opt.out, "output directory");
    run->add_option("--seeds", run_opt.seeds, "override: use seeds 1..N");
    run->add_option("--parallelism", run_opt.parallelism, "worker threads (0 = auto)");
    run->add_flag("--dry-run", run_opt.dry_run, "validate and print, do not simulate");

    std::string matrix_path;
    bool steady_dry = false;
    auto* steady = app.add_subcommand("steady-state", "stationary distribution of a chain");
    steady->add_option("matrix", matrix_path, "plain-text transition matrix")->required();
    steady->add_flag("--dry-run", steady_dry, "validate the matrix only");

    CommonOpts sweep_opt;
    auto* sweep = app.add_subcommand("selfish-sweep", "selfish-mining alpha sweep");
    sweep->add_option("config", sweep_opt.config, "sweep config (json)")->required();
    sweep->add_option("--config", sweep_opt.config, "sweep config (json)");
    sweep->add_option("--out", sweep_opt.out, "output directory");
    sweep->add_option("--seeds", sweep_opt.seeds, "override: use seeds 1..N");
    sweep->add_option("--parallelism", sweep_opt.parallelism, "worker threads (0 = auto)");
    sweep->add_flag("--dry-run", sweep_opt.dry_run, "validate and print, do not simulate");

    std::string validate_path;
    bool validate_dry = false;
    auto* validate = app.add_subcommand("validate-config", "parse and normalize a config");
    validate->add_option("config", validate_path, "config file (json)")->required();
    validate->add_flag("--dry-run", validate_dry, "alias; validation never simulates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*run) return cmd_run_experiment(run_opt);
        if (*steady) return cmd_steady_state(matrix_path, steady_dry);
        if (*sweep) return cmd_selfish_sweep(sweep_opt);
        if (*validate) return cmd_validate(validate_path);
    } catch (const vdhla::exp::ConfigError& e) {
        std::cerr << "error: config: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: config: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: runtime: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitConfig;
}
