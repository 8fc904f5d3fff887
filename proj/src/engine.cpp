#include "dreem/engine.hpp"

#include <cmath>
#include <future>
#include <string>

#include "dreem/error.hpp"

namespace dreem {

std::string_view protocol_name(Protocol protocol) {
    switch (protocol) {
    case Protocol::DreemMe:
        return "dreem-me";
    case Protocol::Leach:
        return "leach";
    case Protocol::LeachC:
        return "leach-c";
    }
    return "unknown";
}

Protocol parse_protocol(std::string_view name) {
    for (Protocol p : {Protocol::DreemMe, Protocol::Leach, Protocol::LeachC}) {
        if (protocol_name(p) == name) {
            return p;
        }
    }
    throw ConfigInvalid("unknown protocol '" + std::string(name) + "'");
}

void SimConfig::validate() const {
    radio.validate();
    if (!(drop_prob >= 0.0 && drop_prob <= 1.0)) {
        throw ConfigInvalid("drop probability must lie in [0, 1]");
    }
    if (runs < 1) {
        throw ConfigInvalid("runs must be at least 1");
    }
    if (max_rounds < 1) {
        throw ConfigInvalid("max_rounds must be at least 1");
    }
    if (nodes_per_region < 1) {
        throw ConfigInvalid("nodes_per_region must be at least 1");
    }
    if (!(leach_p > 0.0 && leach_p <= 1.0)) {
        throw ConfigInvalid("LEACH probability must lie in (0, 1]");
    }
    if (leach_c_heads < 1) {
        throw ConfigInvalid("LEACH-C head count must be at least 1");
    }
}

ChannelOutcome channel(int sent_packets, double drop_prob, Rng& rng) {
    if (sent_packets < 0) {
        throw NegativeInput("packet count must be non-negative");
    }
    ChannelOutcome out;
    for (int i = 0; i < sent_packets; ++i) {
        if (rng.uniform() < drop_prob) {
            ++out.dropped;
        } else {
            ++out.received;
        }
    }
    return out;
}

RunResult run_once(const SimConfig& config, int run_index, const RoundObserver& observer) {
    config.validate();
    Rng rng = Rng::substream(config.seed, static_cast<std::uint64_t>(run_index));
    Deployment deployment = deploy(config.radio, config.nodes_per_region, rng);

    RunResult result;
    result.node_count = deployment.size();
    result.death_round.assign(static_cast<std::size_t>(deployment.size()), std::nullopt);
    for (const auto& node : deployment.nodes()) {
        result.node_region.push_back(node.region);
    }

    std::optional<LeachState> leach;
    if (config.protocol == Protocol::Leach) {
        leach.emplace(deployment.size(), config.leach_p);
    }

    for (int round = 1; round <= config.max_rounds && deployment.alive_count() > 0; ++round) {
        std::optional<Deployment> before;
        if (observer) {
            before = deployment;
        }

        RoundPlan plan;
        RoundEnergy energy;
        switch (config.protocol) {
        case Protocol::DreemMe:
            plan = dreem_plan(deployment);
            energy = dreem_energy_round(deployment, plan, config.radio);
            break;
        case Protocol::Leach:
            plan = leach_plan(deployment, *leach, rng);
            energy = leach_energy_round(deployment, plan, config.radio);
            break;
        case Protocol::LeachC:
            plan = leach_c_plan(deployment, config.leach_c_heads);
            energy = leach_energy_round(deployment, plan, config.radio);
            break;
        }

        const ChannelOutcome link = channel(plan.packets_to_bs(), config.drop_prob, rng);

        RoundMetrics metrics;
        metrics.round = round;
        metrics.alive = deployment.alive_count();
        metrics.dead = deployment.size() - metrics.alive;
        metrics.sent_to_bs = plan.packets_to_bs();
        metrics.received_at_bs = link.received;
        metrics.dropped = link.dropped;
        metrics.energy_consumed = energy.consumed;
        metrics.cluster_heads = static_cast<int>(plan.cluster_heads.size());

        for (const auto& node : deployment.nodes()) {
            auto& died = result.death_round[static_cast<std::size_t>(node.id)];
            if (!node.alive && !died) {
                died = round;
            }
        }
        if (metrics.dead > 0 && !result.first_node_death_round) {
            result.first_node_death_round = round;
        }
        if (metrics.alive == 0) {
            result.all_dead_round = round;
        }

        result.rounds.push_back(metrics);
        if (observer) {
            observer(RoundObservation{*before, plan, energy, deployment, result.rounds.back()});
        }
    }
    return result;
}

std::vector<RunResult> run_replications(const SimConfig& config) {
    config.validate();
    std::vector<std::future<RunResult>> pending;
    pending.reserve(static_cast<std::size_t>(config.runs));
    for (int run = 0; run < config.runs; ++run) {
        pending.push_back(std::async(std::launch::async, [&config, run] { return run_once(config, run); }));
    }
    std::vector<RunResult> results;
    results.reserve(pending.size());
    for (auto& f : pending) {
        results.push_back(f.get());
    }
    return results;
}

} // namespace dreem
