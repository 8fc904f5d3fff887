#include "dreem/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dreem/error.hpp"

namespace dreem {
namespace {

void require_alive_nodes(const Deployment& deployment) {
    if (deployment.alive_count() == 0) {
        throw EmptyNetwork("no alive node left to plan a round for");
    }
}

// Nearest head by Euclidean distance; `heads` ascending so the first minimum
// is the lowest id.
NodeId nearest_head(const Deployment& deployment, const NodeState& member,
                    const std::vector<NodeId>& heads) {
    NodeId best = heads.front();
    double best_d = std::numeric_limits<double>::infinity();
    for (NodeId h : heads) {
        const double d = distance(member.position, deployment.node(h).position);
        if (d < best_d) {
            best_d = d;
            best = h;
        }
    }
    return best;
}

// Heads ascending; every alive non-head joins its nearest head. With no
// heads, every alive node sends directly.
RoundPlan nearest_head_plan(const Deployment& deployment, std::vector<NodeId> heads) {
    std::sort(heads.begin(), heads.end());
    RoundPlan plan;
    if (heads.empty()) {
        plan.direct_senders = deployment.alive_ids();
        return plan;
    }
    plan.cluster_heads = heads;
    plan.bs_senders = heads;
    for (NodeId id : deployment.alive_ids()) {
        if (std::binary_search(heads.begin(), heads.end(), id)) {
            continue;
        }
        plan.associations.emplace(id, nearest_head(deployment, deployment.node(id), heads));
    }
    return plan;
}

RoundEnergy apply_plan(Deployment& deployment, const RoundPlan& plan, const RadioParams& params) {
    const std::int64_t k = params.packet_bits;
    RoundEnergy out;
    auto charge = [&](NodeId id, double amount) {
        const double taken = debit(deployment.node(id), amount);
        out.consumed += taken;
        out.debits.push_back(Debit{id, taken});
    };

    std::map<NodeId, std::int64_t> received;
    for (NodeId head : plan.cluster_heads) {
        received[head] = 0;
    }
    for (const auto& [member, head] : plan.associations) {
        const double d = distance(deployment.node(member).position, deployment.node(head).position);
        charge(member, tx_cost(params, k, d));
        charge(head, rx_cost(params, k));
        ++received[head];
    }
    for (const auto& [head, count] : received) {
        charge(head, aggregation_cost(params, k, count + 1));
    }
    for (const auto& edge : plan.relay_edges) {
        const double d = distance(deployment.node(edge.from).position, deployment.node(edge.to).position);
        charge(edge.from, tx_cost(params, k, d));
        charge(edge.to, rx_cost(params, k));
        charge(edge.to, aggregation_cost(params, k, 1));
    }
    for (NodeId id : plan.bs_senders) {
        charge(id, tx_cost(params, k, distance(deployment.node(id).position, kBaseStation)));
    }
    for (NodeId id : plan.direct_senders) {
        charge(id, tx_cost(params, k, distance(deployment.node(id).position, kBaseStation)));
    }
    return out;
}

} // namespace

RoundPlan dreem_plan(const Deployment& deployment) {
    require_alive_nodes(deployment);
    RoundPlan plan;

    for (RegionId region = 2; region <= kRegionCount; ++region) {
        const auto alive = deployment.alive_in_region(region);
        if (alive.empty()) {
            continue;
        }
        // Ascending ids, so strict > keeps the lowest id on ties.
        NodeId head = alive.front();
        for (NodeId id : alive) {
            if (deployment.node(id).energy > deployment.node(head).energy) {
                head = id;
            }
        }
        plan.region_heads.emplace(region, head);
        plan.cluster_heads.push_back(head);
    }
    std::sort(plan.cluster_heads.begin(), plan.cluster_heads.end());

    for (NodeId id : deployment.alive_ids()) {
        const NodeState& node = deployment.node(id);
        if (node.region == 1) {
            plan.direct_senders.push_back(id);
            continue;
        }
        const NodeId own_head = plan.region_heads.at(node.region);
        if (own_head == id) {
            continue;
        }
        if (is_middle_region(node.region)) {
            plan.associations.emplace(id, own_head);
            continue;
        }
        std::vector<NodeId> candidates;
        for (RegionId r : nearby_regions(node.region)) {
            if (auto it = plan.region_heads.find(r); it != plan.region_heads.end()) {
                candidates.push_back(it->second);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        plan.associations.emplace(id, nearest_head(deployment, node, candidates));
    }

    for (RegionId outer = 6; outer <= kRegionCount; ++outer) {
        const auto head = plan.region_heads.find(outer);
        if (head == plan.region_heads.end()) {
            continue;
        }
        const auto relay = plan.region_heads.find(relay_target(outer));
        if (relay != plan.region_heads.end()) {
            plan.relay_edges.push_back(RelayEdge{head->second, relay->second});
        } else {
            plan.bs_senders.push_back(head->second);
        }
    }
    for (RegionId middle = 2; middle <= 5; ++middle) {
        if (auto it = plan.region_heads.find(middle); it != plan.region_heads.end()) {
            plan.bs_senders.push_back(it->second);
        }
    }
    std::sort(plan.bs_senders.begin(), plan.bs_senders.end());
    return plan;
}

RoundEnergy dreem_energy_round(Deployment& deployment, const RoundPlan& plan,
                               const RadioParams& params) {
    return apply_plan(deployment, plan, params);
}

LeachState::LeachState(int node_count, double p_)
    : p(p_), eligible(static_cast<std::size_t>(node_count), true) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw ConfigInvalid("LEACH probability must lie in (0, 1]");
    }
}

int LeachState::epoch_length() const {
    return std::max(1, static_cast<int>(std::lround(1.0 / p)));
}

double LeachState::threshold() const {
    const int phase = round_index % epoch_length();
    return p / (1.0 - p * phase);
}

RoundPlan leach_plan(const Deployment& deployment, LeachState& state, Rng& rng) {
    if (state.round_index % state.epoch_length() == 0) {
        std::fill(state.eligible.begin(), state.eligible.end(), true);
    }
    const double threshold = state.threshold();
    std::vector<NodeId> heads;
    for (NodeId id : deployment.alive_ids()) {
        const auto slot = static_cast<std::size_t>(id);
        if (!state.eligible.at(slot)) {
            continue;
        }
        if (rng.uniform() < threshold) {
            heads.push_back(id);
            state.eligible[slot] = false;
        }
    }
    ++state.round_index;
    return nearest_head_plan(deployment, std::move(heads));
}

RoundPlan leach_c_plan(const Deployment& deployment, int head_count) {
    require_alive_nodes(deployment);
    const auto alive = deployment.alive_ids();
    double sum = 0.0;
    double max_energy = 0.0;
    for (NodeId id : alive) {
        sum += deployment.node(id).energy;
        max_energy = std::max(max_energy, deployment.node(id).energy);
    }
    const double mean = sum / static_cast<double>(alive.size());

    // The maximum always qualifies; the explicit check guards against the
    // rounded mean exceeding it when energies are (nearly) equal.
    std::vector<NodeId> candidates;
    for (NodeId id : alive) {
        const double e = deployment.node(id).energy;
        if (e >= mean || e == max_energy) {
            candidates.push_back(id);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](NodeId a, NodeId b) {
        return deployment.node(a).energy > deployment.node(b).energy;
    });
    if (static_cast<int>(candidates.size()) > head_count) {
        candidates.resize(static_cast<std::size_t>(std::max(head_count, 0)));
    }
    return nearest_head_plan(deployment, std::move(candidates));
}

RoundEnergy leach_energy_round(Deployment& deployment, const RoundPlan& plan,
                               const RadioParams& params) {
    return apply_plan(deployment, plan, params);
}

} // namespace dreem
