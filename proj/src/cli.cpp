#include "dreem/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dreem/engine.hpp"
#include "dreem/error.hpp"
#include "dreem/report.hpp"
#include "dreem/stats.hpp"

namespace dreem {
namespace {

namespace fs = std::filesystem;

class IoError : public Error {
public:
    using Error::Error;
};

std::string protocol_label(Protocol protocol) {
    switch (protocol) {
    case Protocol::DreemMe:
        return "DREEM-ME";
    case Protocol::Leach:
        return "LEACH";
    case Protocol::LeachC:
        return "LEACH-C (simplified centralized baseline)";
    }
    return "unknown";
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    writer(file);
    file.flush();
    if (!file) {
        throw IoError("failed writing " + path.string());
    }
}

nlohmann::json config_echo(const SimConfig& c, const std::vector<Protocol>& protocols) {
    nlohmann::json names = nlohmann::json::array();
    for (Protocol p : protocols) {
        names.push_back(std::string(protocol_name(p)));
    }
    return {
        {"protocols", names},
        {"runs", c.runs},
        {"seed", c.seed},
        {"max_rounds", c.max_rounds},
        {"drop_prob", c.drop_prob},
        {"nodes_per_region", c.nodes_per_region},
        {"packet_bits", c.radio.packet_bits},
        {"init_energy_j", c.radio.initial_energy},
        {"e_elec_j_per_bit", c.radio.e_elec},
        {"e_amp_j_per_bit_m2", c.radio.e_amp},
        {"e_da_j_per_bit_signal", c.radio.e_da},
        {"leach_p", c.leach_p},
        {"leach_c_heads", c.leach_c_heads},
        {"confidence", 0.95},
    };
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Round-based DREEM-ME / LEACH / LEACH-C wireless sensor network simulator"};
    app.set_version_flag("--version", kToolVersion);

    std::vector<std::string> protocol_names;
    SimConfig base;
    std::string out_dir = "./results";

    app.add_option("--protocol", protocol_names, "Protocol to simulate (repeatable); default: all three")
        ->check(CLI::IsMember({"dreem-me", "leach", "leach-c"}));
    app.add_option("--runs", base.runs, "Replications per protocol")->capture_default_str();
    app.add_option("--seed", base.seed, "Master seed")->capture_default_str();
    app.add_option("--max-rounds", base.max_rounds, "Round cap per replication")->capture_default_str();
    app.add_option("--drop-prob", base.drop_prob, "Per-packet loss probability on the BS link")
        ->capture_default_str();
    app.add_option("--nodes-per-region", base.nodes_per_region, "Nodes deployed in each of the 9 regions")
        ->capture_default_str();
    app.add_option("--packet-bits", base.radio.packet_bits, "Packet size in bits")->capture_default_str();
    app.add_option("--init-energy", base.radio.initial_energy, "Initial node energy in joules")
        ->capture_default_str();
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::vector<Protocol> protocols;
    if (protocol_names.empty()) {
        protocols = {Protocol::DreemMe, Protocol::Leach, Protocol::LeachC};
    } else {
        for (const auto& name : protocol_names) {
            const Protocol p = parse_protocol(name);
            if (std::find(protocols.begin(), protocols.end(), p) == protocols.end()) {
                protocols.push_back(p);
            }
        }
    }

    try {
        base.validate();
    } catch (const ConfigInvalid& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        const fs::path dir(out_dir);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) {
            throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
        }

        nlohmann::json manifest;
        manifest["tool"] = "dreem_sim";
        manifest["version"] = kToolVersion;
        manifest["config"] = config_echo(base, protocols);
        manifest["outputs"] = nlohmann::json::object();

        for (Protocol protocol : protocols) {
            SimConfig config = base;
            config.protocol = protocol;
            const auto results = run_replications(config);
            const std::string name(protocol_name(protocol));

            nlohmann::json entry;
            entry["label"] = protocol_label(protocol);
            entry["runs"] = nlohmann::json::array();
            entry["aggregates"] = nlohmann::json::object();

            for (std::size_t i = 0; i < results.size(); ++i) {
                const std::string file = name + "_run" + std::to_string(i + 1) + ".csv";
                write_file(dir / file, [&](std::ostream& os) { write_run_csv(os, results[i]); });
                const auto& r = results[i];
                entry["runs"].push_back({
                    {"file", file},
                    {"rounds", r.rounds.size()},
                    {"first_node_death_round",
                     r.first_node_death_round ? nlohmann::json(*r.first_node_death_round) : nlohmann::json()},
                    {"all_dead_round", r.all_dead_round ? nlohmann::json(*r.all_dead_round) : nlohmann::json()},
                });
            }
            for (Metric metric : kAggregateMetrics) {
                const std::string file = name + "_agg_" + std::string(metric_name(metric)) + ".csv";
                const auto series = aggregate(results, metric);
                write_file(dir / file, [&](std::ostream& os) { write_aggregate_csv(os, series); });
                entry["aggregates"][std::string(metric_name(metric))] = file;
            }
            manifest["outputs"][name] = entry;
            out << protocol_label(protocol) << ": " << results.size() << " runs written\n";
        }

        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
        manifest["wall_clock_seconds"] = elapsed.count();
        write_file(dir / "manifest.json", [&](std::ostream& os) { os << manifest.dump(2) << '\n'; });
    } catch (const IoError& e) {
        err << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ConfigInvalid& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}

} // namespace dreem
