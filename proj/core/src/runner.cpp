#include "vdhla/runner.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace vdhla::exp {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct TrialJob {
    std::size_t config_index;
    std::uint64_t seed;
};

}  // namespace

void write_trial_csv(const std::filesystem::path& path, const MetricsTrace& trace) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    out << "iteration,reward,cum_tnr,cum_tnas,action,p_favorable\n";
    for (const IterationRecord& r : trace.records()) {
        out << r.iteration << ',' << r.reward << ',' << r.cum_tnr << ',' << r.cum_tnas
            << ',' << r.action << ',' << format_double(r.p_favorable) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string summary_json(const std::vector<ConfigSummary>& summaries) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ConfigSummary& s : summaries) {
        arr.push_back({{"name", s.name},
                       {"seeds", s.seeds},
                       {"mean_tnr", s.tnr.mean},
                       {"std_tnr", s.tnr.stddev},
                       {"mean_tnas", s.tnas.mean},
                       {"std_tnas", s.tnas.stddev},
                       {"mean_p_favorable", s.mean_p_favorable}});
    }
    return arr.dump(2);
}

SuiteResult run_suite(const std::vector<ExperimentConfig>& configs,
                      const std::filesystem::path& out_dir, unsigned parallelism) {
    for (const ExperimentConfig& c : configs) c.validate();

    std::vector<TrialJob> jobs;
    for (std::size_t ci = 0; ci < configs.size(); ++ci)
        for (std::uint64_t seed : configs[ci].seeds) jobs.push_back({ci, seed});

    std::vector<MetricsTrace> traces(jobs.size());
    if (!jobs.empty()) {
        unsigned workers = parallelism ? parallelism : std::thread::hardware_concurrency();
        if (workers == 0) workers = 1;
        workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));

        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= jobs.size()) return;
                    traces[i] = run_trial(configs[jobs[i].config_index], jobs[i].seed);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }

    SuiteResult result;
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + out_dir.string());

    try {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            const ExperimentConfig& cfg = configs[jobs[i].config_index];
            const std::filesystem::path path =
                out_dir / (cfg.name + "_seed" + std::to_string(jobs[i].seed) + ".csv");
            write_trial_csv(path, traces[i]);
            result.written_files.push_back(path);
        }

        std::size_t job_index = 0;
        for (const ExperimentConfig& cfg : configs) {
            std::vector<double> tnrs, tnass, pfavs;
            for (std::size_t s = 0; s < cfg.seeds.size(); ++s, ++job_index) {
                tnrs.push_back(static_cast<double>(traces[job_index].tnr()));
                tnass.push_back(static_cast<double>(traces[job_index].tnas()));
                pfavs.push_back(traces[job_index].p_favorable());
            }
            ConfigSummary sum;
            sum.name = cfg.name;
            sum.seeds = static_cast<long>(cfg.seeds.size());
            sum.tnr = aggregate(tnrs);
            sum.tnas = aggregate(tnass);
            sum.mean_p_favorable = aggregate(pfavs).mean;
            result.summaries.push_back(std::move(sum));
        }

        const std::filesystem::path summary_path = out_dir / "summary.json";
        std::ofstream out(summary_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + summary_path.string());
        out << summary_json(result.summaries) << '\n';
        if (!out) throw std::runtime_error("write failed: " + summary_path.string());
        result.written_files.push_back(summary_path);
    } catch (...) {
        for (const auto& p : result.written_files) std::filesystem::remove(p, ec);
        throw;
    }
    return result;
}

}  // namespace vdhla::exp
