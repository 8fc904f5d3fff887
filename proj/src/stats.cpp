#include "dreem/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/students_t.hpp>

#include "dreem/error.hpp"

namespace dreem {

std::string_view metric_name(Metric metric) {
    switch (metric) {
    case Metric::Alive:
        return "alive";
    case Metric::Dead:
        return "dead";
    case Metric::SentToBs:
        return "sent_to_bs";
    case Metric::ReceivedAtBs:
        return "received_at_bs";
    case Metric::Dropped:
        return "dropped";
    case Metric::EnergyConsumed:
        return "energy_consumed_j";
    }
    return "unknown";
}

double metric_value(const RoundMetrics& row, Metric metric) {
    switch (metric) {
    case Metric::Alive:
        return row.alive;
    case Metric::Dead:
        return row.dead;
    case Metric::SentToBs:
        return row.sent_to_bs;
    case Metric::ReceivedAtBs:
        return row.received_at_bs;
    case Metric::Dropped:
        return row.dropped;
    case Metric::EnergyConsumed:
        return row.energy_consumed;
    }
    return 0.0;
}

Summary summarize(std::span<const double> values, double confidence) {
    if (values.empty()) {
        throw EmptyInput("cannot summarize an empty sample");
    }
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw ConfigInvalid("confidence level must lie in (0, 1)");
    }
    Summary s;
    s.n = static_cast<int>(values.size());
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;

    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    s.mean = sum / s.n;

    if (s.n > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        const double sd = std::sqrt(ss / (s.n - 1));
        const boost::math::students_t dist(s.n - 1);
        const double t = boost::math::quantile(dist, 1.0 - (1.0 - confidence) / 2.0);
        s.half_width = t * sd / std::sqrt(static_cast<double>(s.n));
    }
    s.ci_low = s.mean - s.half_width;
    s.ci_high = s.mean + s.half_width;
    return s;
}

RoundMetrics padded_row(const RunResult& run, int round) {
    if (round >= 1 && round <= static_cast<int>(run.rounds.size())) {
        return run.rounds[static_cast<std::size_t>(round - 1)];
    }
    RoundMetrics row;
    row.round = round;
    row.alive = 0;
    row.dead = run.node_count;
    return row;
}

AggregateSeries aggregate(std::span<const RunResult> results, Metric metric, double confidence) {
    if (results.empty()) {
        throw EmptyInput("aggregate needs at least one run");
    }
    std::size_t horizon = 0;
    for (const auto& run : results) {
        horizon = std::max(horizon, run.rounds.size());
    }

    AggregateSeries series;
    series.metric = metric;
    series.rows.reserve(horizon);
    std::vector<double> sample(results.size());
    for (int round = 1; round <= static_cast<int>(horizon); ++round) {
        for (std::size_t i = 0; i < results.size(); ++i) {
            sample[i] = metric_value(padded_row(results[i], round), metric);
        }
        const Summary s = summarize(sample, confidence);
        series.rows.push_back(AggregateRow{round, s.mean, s.ci_low, s.ci_high, s.min, s.max, s.n});
    }
    return series;
}

} // namespace dreem
