#include "dreem/report.hpp"

#include <charconv>

namespace dreem {

std::string format_number(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf, end);
}

void write_run_csv(std::ostream& out, const RunResult& run) {
    out << kRunCsvHeader << '\n';
    for (const auto& r : run.rounds) {
        out << r.round << ',' << r.alive << ',' << r.dead << ',' << r.sent_to_bs << ','
            << r.received_at_bs << ',' << r.dropped << ',' << format_number(r.energy_consumed) << '\n';
    }
}

void write_aggregate_csv(std::ostream& out, const AggregateSeries& series) {
    out << kAggregateCsvHeader << '\n';
    for (const auto& r : series.rows) {
        out << r.round << ',' << format_number(r.mean) << ',' << format_number(r.ci_low) << ','
            << format_number(r.ci_high) << ',' << format_number(r.min) << ',' << format_number(r.max)
            << ',' << r.n << '\n';
    }
}

} // namespace dreem
