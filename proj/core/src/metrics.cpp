#include "vdhla/metrics.hpp"

#include <cmath>

namespace vdhla::exp {

MetricsTrace::MetricsTrace(long expected_iterations) {
    records_.reserve(static_cast<std::size_t>(expected_iterations));
}

void MetricsTrace::record(int action, int reward, bool favorable_known,
                          int favorable_action) {
    IterationRecord rec;
    rec.iteration = static_cast<long>(records_.size()) + 1;
    rec.reward = reward;
    rec.cum_tnr = tnr() + reward;
    rec.cum_tnas = tnas() + (rec.iteration > 1 && action != previous_action_ ? 1 : 0);
    rec.action = action;
    if (favorable_known && action == favorable_action) ++favorable_count_;
    rec.p_favorable = favorable_known
                          ? static_cast<double>(favorable_count_) /
                                static_cast<double>(rec.iteration)
                          : 0.0;
    previous_action_ = action;
    records_.push_back(rec);
}

Aggregate aggregate(const std::vector<double>& values) {
    Aggregate a;
    if (values.empty()) return a;
    double sum = 0.0;
    for (double v : values) sum += v;
    a.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - a.mean) * (v - a.mean);
        a.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return a;
}

}  // namespace vdhla::exp
