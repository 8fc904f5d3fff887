#pragma once

#include <vector>

#include "dreem/energy_model.hpp"
#include "dreem/geometry.hpp"
#include "dreem/rng.hpp"

namespace dreem {

using NodeId = int;

struct NodeState {
    NodeId id = 0;
    Point position;
    RegionId region = 1;
    double energy = 0.0;
    bool alive = true;
};

/// Removes `amount` joules from `node`, flooring at zero. The node is marked
/// dead when its balance reaches zero. Returns the energy actually removed.
/// Throws NegativeInput for a negative amount.
double debit(NodeState& node, double amount);

/// Node population of one replication.
class Deployment {
public:
    Deployment() = default;
    Deployment(std::vector<NodeState> nodes, int nodes_per_region);

    const std::vector<NodeState>& nodes() const { return nodes_; }
    const NodeState& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    NodeState& node(NodeId id) { return nodes_.at(static_cast<std::size_t>(id)); }
    int nodes_per_region() const { return nodes_per_region_; }
    int size() const { return static_cast<int>(nodes_.size()); }

    int alive_count() const;
    double total_energy() const;

    /// Alive node ids in region `region`, ascending. Throws InvalidRegion.
    std::vector<NodeId> alive_in_region(RegionId region) const;
    /// All alive node ids, ascending.
    std::vector<NodeId> alive_ids() const;

private:
    std::vector<NodeState> nodes_;
    int nodes_per_region_ = 0;
};

/// Places `nodes_per_region` nodes in each region, regions in ascending id
/// order, at full initial energy. Node ids are assigned in placement order.
Deployment deploy(const RadioParams& params, int nodes_per_region, Rng& rng);

} // namespace dreem
