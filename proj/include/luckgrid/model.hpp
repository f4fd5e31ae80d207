#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "luckgrid/geometry.hpp"
#include "luckgrid/rng.hpp"

namespace luckgrid {

enum class NetworkRule { Random, Location, Wealth, Talent };
enum class MovementRule { Random, Highest, Average };
enum class EventKind { Lucky, Unlucky };

std::string to_string(NetworkRule r);
std::string to_string(MovementRule r);
std::optional<NetworkRule> parse_network_rule(const std::string& text);
std::optional<MovementRule> parse_movement_rule(const std::string& text);

/// "Random-Highest" style label for a strategy combination.
std::string combo_label(NetworkRule net, MovementRule move);

/// Full parameterization of one run. Field names double as the config
/// file keys.
struct SimParams {
    int n_agents = 1000;             // N
    double world_side = 200.0;       // L, patches
    int n_events = 500;              // N_E
    double p_lucky = 50.0;           // pL, percent of events that are lucky
    double talent_mean = 0.6;        // m_T
    double talent_std = 0.1;         // sigma_T
    double event_radius = 1.0;       // r, patches
    double event_speed = 1.0;        // v, patches per step
    double agent_speed = 1.0;        // v_a, patches per step
    double initial_wealth = 5.0;     // C(0), wealth magnitude
    double delta_wealth = 0.5;       // dC, magnitude shift per event
    double location_radius = 5.0;    // R, patches
    double wealth_radius_mult = 3.0; // nC
    double talent_radius_mult = 1.0; // nT
    std::optional<double> random_link_prob; // p_rand override; default pi*R^2/L^2
    int steps = 100;
    NetworkRule network_rule = NetworkRule::Random;
    MovementRule movement_rule = MovementRule::Random;
    std::uint64_t seed = 1;

    /// Edge probability for the Random network rule. Defaults to the
    /// expected pair-link density of the Location rule, pi*R^2/L^2, so
    /// the four rules are comparable; override via random_link_prob.
    double effective_link_prob() const;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    bool operator==(const SimParams&) const = default;
};

struct Agent {
    int id = 0;
    TorusPoint pos;
    double talent = 0.0;  // immutable after init, in (0,1)
    double wealth = 0.0;  // magnitude C_i, may go negative
    int lucky_hits = 0;   // exposure count, including failed talent draws
    int unlucky_hits = 0;
    int lucky_gains = 0;  // lucky hits whose talent draw succeeded

    bool operator==(const Agent&) const = default;
};

struct EventCircle {
    int id = 0;
    TorusPoint pos;
    EventKind kind = EventKind::Lucky;
    double radius = 1.0;

    bool operator==(const EventCircle&) const = default;
};

/// Symmetric, irreflexive adjacency as per-agent sorted neighbor id lists.
using Adjacency = std::vector<std::vector<int>>;

/// Current (event, agent) intersections as per-event sorted agent id lists.
using ContactSet = std::vector<std::vector<int>>;

struct WorldState {
    SimParams params;
    std::vector<Agent> agents;
    std::vector<EventCircle> events;
    Adjacency adjacency;   // rebuilt from scratch each step
    ContactSet contacts;   // geometry as of the end of the last step
    int step_index = 0;
    CounterRng rng;

    bool operator==(const WorldState&) const = default;
};

/// Number of Lucky circles for a parameterization: round(N_E * pL / 100),
/// an exact deterministic split rather than a per-circle Bernoulli.
int lucky_event_count(const SimParams& params);

/// Seeded world construction. Draw order: per agent (ascending id) x then
/// y; per agent a talent (two draws each); per event x then y. Talents are
/// Normal(m_T, sigma_T) clamped into [1e-6, 1-1e-6]; the first
/// lucky_event_count circles are Lucky, the rest Unlucky. Initial overlaps
/// seed the ContactSet without firing.
WorldState init_world(const SimParams& params, std::uint64_t seed);

} // namespace luckgrid
