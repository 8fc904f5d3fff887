#include "dreem/network.hpp"

#include <string>

#include "dreem/error.hpp"

namespace dreem {

double debit(NodeState& node, double amount) {
    if (amount < 0.0) {
        throw NegativeInput("debit amount must be non-negative");
    }
    if (amount == 0.0) {
        return 0.0;
    }
    const double before = node.energy;
    const double after = before - amount;
    if (after <= 0.0) {
        node.energy = 0.0;
        node.alive = false;
        return before;
    }
    node.energy = after;
    return before - after;
}

Deployment::Deployment(std::vector<NodeState> nodes, int nodes_per_region)
    : nodes_(std::move(nodes)), nodes_per_region_(nodes_per_region) {}

int Deployment::alive_count() const {
    int n = 0;
    for (const auto& node : nodes_) {
        n += node.alive ? 1 : 0;
    }
    return n;
}

double Deployment::total_energy() const {
    double sum = 0.0;
    for (const auto& node : nodes_) {
        sum += node.energy;
    }
    return sum;
}

std::vector<NodeId> Deployment::alive_in_region(RegionId region) const {
    if (region < 1 || region > kRegionCount) {
        throw InvalidRegion("region id out of range 1..9: " + std::to_string(region));
    }
    std::vector<NodeId> ids;
    for (const auto& node : nodes_) {
        if (node.alive && node.region == region) {
            ids.push_back(node.id);
        }
    }
    return ids;
}

std::vector<NodeId> Deployment::alive_ids() const {
    std::vector<NodeId> ids;
    for (const auto& node : nodes_) {
        if (node.alive) {
            ids.push_back(node.id);
        }
    }
    return ids;
}

Deployment deploy(const RadioParams& params, int nodes_per_region, Rng& rng) {
    if (nodes_per_region < 1) {
        throw ConfigInvalid("nodes_per_region must be at least 1");
    }
    std::vector<NodeState> nodes;
    nodes.reserve(static_cast<std::size_t>(nodes_per_region * kRegionCount));
    for (const auto& region : all_regions()) {
        for (int i = 0; i < nodes_per_region; ++i) {
            NodeState node;
            node.id = static_cast<NodeId>(nodes.size());
            node.position = sample_in_region(region, rng);
            node.region = region.id;
            node.energy = params.initial_energy;
            node.alive = true;
            nodes.push_back(node);
        }
    }
    return Deployment(std::move(nodes), nodes_per_region);
}

} // namespace dreem
