#pragma once

#include <map>
#include <vector>

#include "dreem/energy_model.hpp"
#include "dreem/network.hpp"
#include "dreem/rng.hpp"

namespace dreem {

/// Outer-ring CH forwarding its aggregate to a middle-ring CH.
struct RelayEdge {
    NodeId from = 0;
    NodeId to = 0;

    friend bool operator==(const RelayEdge&, const RelayEdge&) = default;
};

/// Roles and links for one round, built from the round-start snapshot.
///
/// Every BS-bound packet is exactly one k-bit packet: one per bs_sender and
/// one per direct_sender.
struct RoundPlan {
    /// Region -> CH. Filled by DREEM-ME only; LEACH clusters are not regional.
    std::map<RegionId, NodeId> region_heads;
    /// All CHs, ascending id.
    std::vector<NodeId> cluster_heads;
    /// Member -> CH it sends its sensed packet to.
    std::map<NodeId, NodeId> associations;
    std::vector<RelayEdge> relay_edges;
    /// CHs that uplink their aggregate to the base station, ascending id.
    std::vector<NodeId> bs_senders;
    /// Nodes that send their own packet straight to the base station, ascending id.
    std::vector<NodeId> direct_senders;

    int packets_to_bs() const {
        return static_cast<int>(bs_senders.size() + direct_senders.size());
    }
};

/// Debit actually applied to one node.
struct Debit {
    NodeId node = 0;
    double amount = 0.0;
};

struct RoundEnergy {
    double consumed = 0.0;
    std::vector<Debit> debits;
};

// ---------------------------------------------------------------- DREEM-ME

/// Max-energy regional election with fixed outer->middle relaying.
///
/// - Regions 2..9: the alive node with the most residual energy is CH (lowest
///   id wins ties). Region 1 has no CH; its alive nodes are direct senders.
/// - Middle-ring members join their own region's CH. Outer-ring members join
///   the nearest existing CH among nearby_regions() of their region (lowest CH
///   id wins ties).
/// - Each outer CH relays to the CH of relay_target(); if that region has no
///   CH the outer CH uplinks directly instead.
///
/// Throws EmptyNetwork when no node is alive.
RoundPlan dreem_plan(const Deployment& deployment);

/// Applies one round of radio costs for `plan` in a fixed order:
/// member tx + CH rx, CH aggregation (members + own packet), relay tx/rx plus
/// one aggregation signal at the middle CH, then uplinks to the base station.
RoundEnergy dreem_energy_round(Deployment& deployment, const RoundPlan& plan,
                               const RadioParams& params);

// ------------------------------------------------------------------- LEACH

struct LeachState {
    LeachState(int node_count, double p = 0.1);

    double p;
    int round_index = 0;
    std::vector<bool> eligible;

    /// Rounds per epoch, round(1/p).
    int epoch_length() const;
    /// Election threshold for the current round_index.
    double threshold() const;
};

/// Probabilistic LEACH election. Consumes one uniform draw per alive eligible
/// node (ascending id), then advances state.round_index. Members join the
/// nearest CH; every CH uplinks. With no CH elected every alive node sends
/// directly.
RoundPlan leach_plan(const Deployment& deployment, LeachState& state, Rng& rng);

/// Simplified centralized stand-in for LEACH-C: the `head_count` most
/// energetic alive nodes whose energy is at least the alive mean become CHs
/// (lowest id wins ties). Members join the nearest CH. Throws EmptyNetwork.
RoundPlan leach_c_plan(const Deployment& deployment, int head_count = 9);

/// Cluster accounting without relays: member tx, CH rx per member, CH
/// aggregation (members + own packet), CH uplink; direct senders uplink.
RoundEnergy leach_energy_round(Deployment& deployment, const RoundPlan& plan,
                               const RadioParams& params);

} // namespace dreem
