#pragma once

#include <cstdint>
#include <vector>

#include "luckgrid/exec.hpp"
#include "luckgrid/model.hpp"

namespace luckgrid {

/// Lexicographic rank of the unordered pair {i, j}, i < j, among all
/// C(n, 2) pairs. The Random rule draws the decision for pair {i, j} at
/// stream offset pair_rank(i, j, n), which is what lets the OpenMP build
/// replay the serial draw order exactly.
std::uint64_t pair_rank(int i, int j, int n);

/// Each unordered pair is linked independently with probability
/// link_prob; consumes exactly C(n, 2) draws in lexicographic pair order
/// regardless of execution policy.
Adjacency build_random(const std::vector<Agent>& agents, double link_prob,
                       CounterRng& rng, Exec exec = Exec::Serial);

/// Link iff torus distance <= radius (inclusive).
Adjacency build_location(const std::vector<Agent>& agents, double radius,
                         double world_side, Exec exec = Exec::Serial);

/// Link iff |C_i - C_j| <= mult * delta_wealth (inclusive).
Adjacency build_wealth(const std::vector<Agent>& agents, double mult,
                       double delta_wealth, Exec exec = Exec::Serial);

/// Link iff |T_i - T_j| <= mult * talent_std (inclusive). Uses the
/// parameter talent_std, not the empirical sample deviation.
Adjacency build_talent(const std::vector<Agent>& agents, double mult,
                       double talent_std, Exec exec = Exec::Serial);

/// Dispatch on params.network_rule. Only the Random rule consumes RNG.
Adjacency build_adjacency(const std::vector<Agent>& agents, const SimParams& params,
                          CounterRng& rng, Exec exec = Exec::Serial);

} // namespace luckgrid
