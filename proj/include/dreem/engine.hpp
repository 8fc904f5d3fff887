#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "dreem/energy_model.hpp"
#include "dreem/network.hpp"
#include "dreem/protocols.hpp"
#include "dreem/rng.hpp"

namespace dreem {

enum class Protocol { DreemMe, Leach, LeachC };

/// CLI / file name of a protocol: "dreem-me", "leach" or "leach-c".
std::string_view protocol_name(Protocol protocol);
/// Inverse of protocol_name; throws ConfigInvalid for unknown names.
Protocol parse_protocol(std::string_view name);

struct SimConfig {
    Protocol protocol = Protocol::DreemMe;
    RadioParams radio;
    int nodes_per_region = 10;
    double drop_prob = 0.3;
    int max_rounds = 5000;
    std::uint64_t seed = 1;
    int runs = 5;
    double leach_p = 0.1;
    int leach_c_heads = 9;

    /// Throws ConfigInvalid on any violated constraint.
    void validate() const;
};

/// Counts describe the network at the end of the round.
struct RoundMetrics {
    int round = 0;
    int alive = 0;
    int dead = 0;
    int sent_to_bs = 0;
    int received_at_bs = 0;
    int dropped = 0;
    double energy_consumed = 0.0;
    int cluster_heads = 0;
};

struct RunResult {
    std::vector<RoundMetrics> rounds;
    std::optional<int> first_node_death_round;
    std::optional<int> all_dead_round;
    /// Per node id: round in which the node died, if it did.
    std::vector<std::optional<int>> death_round;
    /// Per node id: home region.
    std::vector<RegionId> node_region;
    int node_count = 0;
};

struct ChannelOutcome {
    int received = 0;
    int dropped = 0;
};

/// Independent Bernoulli loss: one uniform draw per packet, a packet is lost
/// when its draw falls below drop_prob.
ChannelOutcome channel(int sent_packets, double drop_prob, Rng& rng);

/// Everything visible to an observer after one round has been applied.
struct RoundObservation {
    const Deployment& before;
    const RoundPlan& plan;
    const RoundEnergy& energy;
    const Deployment& after;
    const RoundMetrics& metrics;
};

using RoundObserver = std::function<void(const RoundObservation&)>;

/// Runs replication `run_index` to completion.
///
/// Draw order on the replication stream: deployment, then per round the
/// election draws (LEACH only) followed by one channel draw per BS-bound
/// packet. Stops when every node is dead or after max_rounds.
RunResult run_once(const SimConfig& config, int run_index, const RoundObserver& observer = {});

/// Runs replications 0..runs-1 concurrently; results are in run order.
std::vector<RunResult> run_replications(const SimConfig& config);

} // namespace dreem
