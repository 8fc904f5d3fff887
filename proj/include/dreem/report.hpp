#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>

#include "dreem/engine.hpp"
#include "dreem/stats.hpp"

namespace dreem {

inline constexpr std::string_view kRunCsvHeader =
    "round,alive,dead,sent_to_bs,received_at_bs,dropped,energy_consumed_j";
inline constexpr std::string_view kAggregateCsvHeader = "round,mean,ci_low,ci_high,min,max,n";

/// Metrics written as aggregate CSVs, one file each.
inline constexpr std::array<Metric, 4> kAggregateMetrics = {
    Metric::Dead, Metric::SentToBs, Metric::ReceivedAtBs, Metric::Dropped};

/// Shortest decimal string that parses back to exactly `value`.
std::string format_number(double value);

void write_run_csv(std::ostream& out, const RunResult& run);
void write_aggregate_csv(std::ostream& out, const AggregateSeries& series);

} // namespace dreem
