#include "luckgrid/movement.hpp"

#include <cmath>
#include <numbers>

#include "luckgrid/geometry.hpp"

namespace luckgrid {

TorusPoint displace(const TorusPoint& pos, double angle, double dist, double world_side) {
    return wrap(pos.x + dist * std::cos(angle), pos.y + dist * std::sin(angle), world_side);
}

TorusPoint move_random(const Agent& agent, double agent_speed, double world_side,
                       CounterRng& rng) {
    return displace(agent.pos, rng.angle(), agent_speed, world_side);
}

int highest_wealth_target(std::span<const int> neighbors, const std::vector<Agent>& agents) {
    // Neighbor ids are sorted ascending, so keeping the first strict
    // maximum realizes the lowest-id tie-break.
    int best = neighbors[0];
    for (int id : neighbors.subspan(1)) {
        if (agents[static_cast<std::size_t>(id)].wealth >
            agents[static_cast<std::size_t>(best)].wealth)
            best = id;
    }
    return best;
}

TorusPoint average_wealth_target(std::span<const int> neighbors,
                                 const std::vector<Agent>& agents, double world_side) {
    std::vector<TorusPoint> pts;
    std::vector<double> weights;
    pts.reserve(neighbors.size());
    weights.reserve(neighbors.size());
    double total = 0.0;
    for (int id : neighbors) {
        const Agent& nb = agents[static_cast<std::size_t>(id)];
        pts.push_back(nb.pos);
        const double w = std::max(nb.wealth, 0.0);
        weights.push_back(w);
        total += w;
    }
    if (total <= 0.0)
        weights.assign(weights.size(), 1.0);
    return circular_weighted_mean(pts, weights, world_side);
}

TorusPoint move_highest(const Agent& agent, std::span<const int> neighbors,
                        const std::vector<Agent>& agents, double agent_speed,
                        double world_side, CounterRng& rng) {
    if (neighbors.empty())
        return move_random(agent, agent_speed, world_side, rng);
    const int target = highest_wealth_target(neighbors, agents);
    return step_toward(agent.pos, agents[static_cast<std::size_t>(target)].pos,
                       agent_speed, world_side);
}

TorusPoint move_average(const Agent& agent, std::span<const int> neighbors,
                        const std::vector<Agent>& agents, double agent_speed,
                        double world_side, CounterRng& rng) {
    if (neighbors.empty())
        return move_random(agent, agent_speed, world_side, rng);
    const TorusPoint target = average_wealth_target(neighbors, agents, world_side);
    return step_toward(agent.pos, target, agent_speed, world_side);
}

namespace {

std::vector<TorusPoint> propose_serial(WorldState& world) {
    const SimParams& p = world.params;
    std::vector<TorusPoint> out(world.agents.size());
    for (std::size_t i = 0; i < world.agents.size(); ++i) {
        const Agent& a = world.agents[i];
        const std::span<const int> nbrs{world.adjacency[i]};
        switch (p.movement_rule) {
        case MovementRule::Random:
            out[i] = move_random(a, p.agent_speed, p.world_side, world.rng);
            break;
        case MovementRule::Highest:
            out[i] = move_highest(a, nbrs, world.agents, p.agent_speed, p.world_side,
                                  world.rng);
            break;
        case MovementRule::Average:
            out[i] = move_average(a, nbrs, world.agents, p.agent_speed, p.world_side,
                                  world.rng);
            break;
        }
    }
    return out;
}

std::vector<TorusPoint> propose_parallel(WorldState& world) {
    const SimParams& p = world.params;
    const std::size_t n = world.agents.size();

    // An agent draws a direction iff it is on the random path; those
    // draws land at consecutive stream offsets in ascending id order.
    std::vector<std::uint64_t> draw_offset(n, 0);
    std::uint64_t draws = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool random_path =
            p.movement_rule == MovementRule::Random || world.adjacency[i].empty();
        draw_offset[i] = random_path ? draws++ : std::uint64_t(-1);
    }

    const std::uint64_t seed = world.rng.seed();
    const std::uint64_t base = world.rng.counter();
    std::vector<TorusPoint> out(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
        const auto i = static_cast<std::size_t>(si);
        const Agent& a = world.agents[i];
        if (draw_offset[i] != std::uint64_t(-1)) {
            const double angle =
                2.0 * std::numbers::pi * CounterRng::uniform_at(seed, base + draw_offset[i]);
            out[i] = displace(a.pos, angle, p.agent_speed, p.world_side);
        } else if (p.movement_rule == MovementRule::Highest) {
            const int target = highest_wealth_target(world.adjacency[i], world.agents);
            out[i] = step_toward(a.pos, world.agents[static_cast<std::size_t>(target)].pos,
                                 p.agent_speed, p.world_side);
        } else {
            const TorusPoint target =
                average_wealth_target(world.adjacency[i], world.agents, p.world_side);
            out[i] = step_toward(a.pos, target, p.agent_speed, p.world_side);
        }
    }
    world.rng.skip(draws);
    return out;
}

} // namespace

std::vector<TorusPoint> propose_moves(WorldState& world, Exec exec) {
    return exec == Exec::Serial ? propose_serial(world) : propose_parallel(world);
}

} // namespace luckgrid
