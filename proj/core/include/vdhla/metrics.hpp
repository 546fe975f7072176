#pragma once

#include <vector>

namespace vdhla::exp {

struct IterationRecord {
    long iteration = 0;  // 1-based
    int reward = 0;
    long cum_tnr = 0;
    long cum_tnas = 0;
    int action = 0;
    double p_favorable = 0.0;
};

// Per-iteration trace of one trial. TNR accumulates rewards; TNAS counts
// changes of the returned action between consecutive iterations; the
// favorable-action frequency is against the configured favorable index.
class MetricsTrace {
public:
    MetricsTrace() = default;
    explicit MetricsTrace(long expected_iterations);

    void record(int action, int reward, bool favorable_known, int favorable_action);

    const std::vector<IterationRecord>& records() const { return records_; }
    long iterations() const { return static_cast<long>(records_.size()); }
    long tnr() const { return records_.empty() ? 0 : records_.back().cum_tnr; }
    long tnas() const { return records_.empty() ? 0 : records_.back().cum_tnas; }
    double p_favorable() const {
        return records_.empty() ? 0.0 : records_.back().p_favorable;
    }

private:
    std::vector<IterationRecord> records_;
    long favorable_count_ = 0;
    int previous_action_ = 0;
};

struct Aggregate {
    double mean = 0.0;
    double stddev = 0.0;  // sample stddev, 0 for a single value
};

Aggregate aggregate(const std::vector<double>& values);

}  // namespace vdhla::exp
