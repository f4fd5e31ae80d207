#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "luckgrid/exec.hpp"
#include "luckgrid/model.hpp"
#include "luckgrid/stats.hpp"

namespace luckgrid {

struct StepMetrics {
    int step = 0;
    double mean_wealth = 0.0;
    double std_wealth = 0.0;
    double gini = 0.0; // NaN when undefined

    bool operator==(const StepMetrics&) const = default;
};

struct RunResult {
    SimParams params;
    std::uint64_t seed = 0;
    std::string run_id;
    std::vector<StepMetrics> series; // one entry per step index 0..steps
    std::vector<Agent> agents;       // final state, ascending id
    SummaryMetrics summary;          // metrics of the final state
};

/// Per-event sorted lists of agents currently within the event radius.
ContactSet detect_contacts(const std::vector<EventCircle>& events,
                           const std::vector<Agent>& agents, double world_side,
                           Exec exec = Exec::Serial);

/// Deterministic core of the capital update; `draw` is the uniform
/// variate a Lucky event compares against talent (ignored for Unlucky).
void apply_event_with_draw(Agent& agent, EventKind kind, double delta_wealth, double draw);

/// Lucky: wealth += dC iff u < talent, with u drawn here; the hit counts
/// either way. Unlucky: wealth -= dC unconditionally. Talent never changes.
void apply_event(Agent& agent, EventKind kind, double delta_wealth, CounterRng& rng);

/// One half-year step, phases in fixed order: rebuild the social network,
/// apply all movement proposals simultaneously, random-walk every event
/// circle by v, detect disjoint-to-intersecting transitions, fire them in
/// ascending (event id, agent id) order, then commit the new contact set.
/// Throws std::logic_error if the run is already finished.
void step(WorldState& world, Exec exec = Exec::Serial);

/// init_world + params.steps calls of step, recording (mean, std, Gini)
/// after init and after every step. Fully determined by params (seed
/// included): the stream draw order is init draws, then per step the
/// Random-rule pair decisions, random-path movement angles, event angles,
/// and Lucky-event talent draws.
RunResult run(const SimParams& params, Exec exec = Exec::Serial);

} // namespace luckgrid
