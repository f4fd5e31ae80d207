#include "luckgrid/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "luckgrid/geometry.hpp"
#include "luckgrid/movement.hpp"
#include "luckgrid/network.hpp"

namespace luckgrid {

namespace {

ContactSet detect_serial(const std::vector<EventCircle>& events,
                         const std::vector<Agent>& agents, double world_side) {
    ContactSet contacts(events.size());
    for (std::size_t e = 0; e < events.size(); ++e) {
        const EventCircle& ev = events[e];
        const double r2 = ev.radius * ev.radius;
        for (const Agent& a : agents) {
            if (torus_distance_sq(ev.pos, a.pos, world_side) <= r2)
                contacts[e].push_back(a.id);
        }
    }
    return contacts;
}

ContactSet detect_parallel(const std::vector<EventCircle>& events,
                           const std::vector<Agent>& agents, double world_side) {
    ContactSet contacts(events.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t se = 0; se < static_cast<std::ptrdiff_t>(events.size()); ++se) {
        const auto e = static_cast<std::size_t>(se);
        const EventCircle& ev = events[e];
        const double r2 = ev.radius * ev.radius;
        for (const Agent& a : agents) {
            if (torus_distance_sq(ev.pos, a.pos, world_side) <= r2)
                contacts[e].push_back(a.id);
        }
    }
    return contacts;
}

StepMetrics metrics_of(const WorldState& world) {
    std::vector<double> wealth;
    wealth.reserve(world.agents.size());
    for (const Agent& a : world.agents)
        wealth.push_back(a.wealth);
    const SummaryMetrics m = summarize(wealth);
    return {world.step_index, m.mean_wealth, m.std_wealth, m.gini};
}

} // namespace

ContactSet detect_contacts(const std::vector<EventCircle>& events,
                           const std::vector<Agent>& agents, double world_side,
                           Exec exec) {
    return exec == Exec::Serial ? detect_serial(events, agents, world_side)
                                : detect_parallel(events, agents, world_side);
}

void apply_event_with_draw(Agent& agent, EventKind kind, double delta_wealth, double draw) {
    if (kind == EventKind::Lucky) {
        ++agent.lucky_hits;
        if (draw < agent.talent) {
            agent.wealth += delta_wealth;
            ++agent.lucky_gains;
        }
    } else {
        ++agent.unlucky_hits;
        agent.wealth -= delta_wealth;
    }
}

void apply_event(Agent& agent, EventKind kind, double delta_wealth, CounterRng& rng) {
    // Only Lucky consumes a draw; Unlucky is unconditional.
    const double u = kind == EventKind::Lucky ? rng.uniform() : 0.0;
    apply_event_with_draw(agent, kind, delta_wealth, u);
}

void step(WorldState& world, Exec exec) {
    const SimParams& p = world.params;
    if (world.step_index >= p.steps)
        throw std::logic_error("step: run already finished");
    const double L = p.world_side;

    // Phase 1: rebuild the social network from the current state.
    world.adjacency = build_adjacency(world.agents, p, world.rng, exec);

    // Phase 2: all moves proposed from the phase-1 snapshot, then applied
    // simultaneously.
    const std::vector<TorusPoint> proposals = propose_moves(world, exec);
    for (std::size_t i = 0; i < world.agents.size(); ++i)
        world.agents[i].pos = proposals[i];

    // Phase 3: every event circle random-walks by v.
    for (EventCircle& ev : world.events) {
        const double angle = world.rng.angle();
        ev.pos = wrap(ev.pos.x + p.event_speed * std::cos(angle),
                      ev.pos.y + p.event_speed * std::sin(angle), L);
    }

    // Phase 4: pairs entering contact fire, ascending (event id, agent id).
    // Pairs still in contact from last step stay silent; a pair that left
    // and re-enters later fires again.
    ContactSet now = detect_contacts(world.events, world.agents, L, exec);
    std::vector<std::pair<int, int>> firing;
    for (std::size_t e = 0; e < now.size(); ++e) {
        const auto& prev = world.contacts[e];
        for (int agent_id : now[e]) {
            if (!std::binary_search(prev.begin(), prev.end(), agent_id))
                firing.emplace_back(static_cast<int>(e), agent_id);
        }
    }

    // Phase 5: capital updates.
    for (const auto& [event_id, agent_id] : firing) {
        apply_event(world.agents[static_cast<std::size_t>(agent_id)],
                    world.events[static_cast<std::size_t>(event_id)].kind,
                    p.delta_wealth, world.rng);
    }

    // Phase 6: commit.
    world.contacts = std::move(now);
    ++world.step_index;
}

RunResult run(const SimParams& params, Exec exec) {
    WorldState world = init_world(params, params.seed);

    RunResult result;
    result.params = world.params;
    result.seed = params.seed;
    result.run_id = combo_label(params.network_rule, params.movement_rule) + "_s" +
                    std::to_string(params.seed);
    result.series.reserve(static_cast<std::size_t>(params.steps) + 1);
    result.series.push_back(metrics_of(world));
    for (int s = 0; s < params.steps; ++s) {
        step(world, exec);
        result.series.push_back(metrics_of(world));
    }
    result.agents = std::move(world.agents);
    const StepMetrics& last = result.series.back();
    result.summary = {last.mean_wealth, last.std_wealth, last.gini};
    return result;
}

} // namespace luckgrid
