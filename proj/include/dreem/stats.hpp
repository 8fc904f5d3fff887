#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "dreem/engine.hpp"

namespace dreem {

enum class Metric { Alive, Dead, SentToBs, ReceivedAtBs, Dropped, EnergyConsumed };

std::string_view metric_name(Metric metric);
double metric_value(const RoundMetrics& row, Metric metric);

/// Mean with a two-sided Student-t confidence interval plus the observed range.
struct Summary {
    double mean = 0.0;
    double half_width = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double min = 0.0;
    double max = 0.0;
    int n = 0;
};

/// Summarizes a sample. Half-width is t(1-(1-confidence)/2, n-1) * s / sqrt(n)
/// with s the sample standard deviation; a single value gives a zero-width
/// interval. Throws EmptyInput for an empty sample, ConfigInvalid when
/// confidence is not in (0, 1).
Summary summarize(std::span<const double> values, double confidence = 0.95);

struct AggregateRow {
    int round = 0;
    double mean = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double min = 0.0;
    double max = 0.0;
    int n = 0;
};

struct AggregateSeries {
    Metric metric = Metric::Dead;
    std::vector<AggregateRow> rows;
};

/// Row for `round` of a run, padded past its end with the all-dead state
/// (alive 0, dead = node count, no packets, no energy).
RoundMetrics padded_row(const RunResult& run, int round);

/// Per-round summary of `metric` across `results`, over the longest run's
/// horizon. Throws EmptyInput when `results` is empty.
AggregateSeries aggregate(std::span<const RunResult> results, Metric metric, double confidence = 0.95);

} // namespace dreem
