#pragma once

#include <span>
#include <vector>

#include "luckgrid/exec.hpp"
#include "luckgrid/model.hpp"

namespace luckgrid {

/// Step of length agent_speed in a uniform random direction.
TorusPoint move_random(const Agent& agent, double agent_speed, double world_side,
                       CounterRng& rng);

/// Step toward the richest neighbor (ties broken by lowest agent id).
/// An empty neighbor set falls back to move_random, which is the only
/// path that consumes RNG.
TorusPoint move_highest(const Agent& agent, std::span<const int> neighbors,
                        const std::vector<Agent>& agents, double agent_speed,
                        double world_side, CounterRng& rng);

/// Step toward the wealth-weighted circular mean of the neighbors'
/// positions. Weights are max(wealth, 0); if all clamp to zero the mean
/// is unweighted. Empty neighbor set falls back to move_random.
TorusPoint move_average(const Agent& agent, std::span<const int> neighbors,
                        const std::vector<Agent>& agents, double agent_speed,
                        double world_side, CounterRng& rng);

/// Deterministic pieces, shared by the serial and OpenMP paths.
int highest_wealth_target(std::span<const int> neighbors, const std::vector<Agent>& agents);
TorusPoint average_wealth_target(std::span<const int> neighbors,
                                 const std::vector<Agent>& agents, double world_side);
TorusPoint displace(const TorusPoint& pos, double angle, double dist, double world_side);

/// New position for every agent under params.movement_rule, computed
/// from a simultaneous snapshot (world.adjacency and the current agent
/// state; nothing is applied here). Random-direction draws are consumed
/// in ascending agent id order; agents on a deterministic path consume
/// none. Serial and Parallel produce identical proposals.
std::vector<TorusPoint> propose_moves(WorldState& world, Exec exec = Exec::Serial);

} // namespace luckgrid
