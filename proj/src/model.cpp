#include "luckgrid/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace luckgrid {

std::string to_string(NetworkRule r) {
    switch (r) {
    case NetworkRule::Random:   return "Random";
    case NetworkRule::Location: return "Location";
    case NetworkRule::Wealth:   return "Wealth";
    case NetworkRule::Talent:   return "Talent";
    }
    return "?";
}

std::string to_string(MovementRule r) {
    switch (r) {
    case MovementRule::Random:  return "Random";
    case MovementRule::Highest: return "Highest";
    case MovementRule::Average: return "Average";
    }
    return "?";
}

namespace {
std::string lowered(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}
} // namespace

std::optional<NetworkRule> parse_network_rule(const std::string& text) {
    const std::string t = lowered(text);
    if (t == "random")   return NetworkRule::Random;
    if (t == "location") return NetworkRule::Location;
    if (t == "wealth")   return NetworkRule::Wealth;
    if (t == "talent")   return NetworkRule::Talent;
    return std::nullopt;
}

std::optional<MovementRule> parse_movement_rule(const std::string& text) {
    const std::string t = lowered(text);
    if (t == "random")  return MovementRule::Random;
    if (t == "highest") return MovementRule::Highest;
    if (t == "average") return MovementRule::Average;
    return std::nullopt;
}

std::string combo_label(NetworkRule net, MovementRule move) {
    return to_string(net) + "-" + to_string(move);
}

double SimParams::effective_link_prob() const {
    if (random_link_prob)
        return *random_link_prob;
    return std::numbers::pi * location_radius * location_radius / (world_side * world_side);
}

void SimParams::validate() const {
    auto fail = [](const char* what) { throw std::invalid_argument(what); };
    if (n_agents < 1) fail("n_agents must be >= 1");
    if (!(world_side > 0.0)) fail("world_side must be > 0");
    if (n_events < 0) fail("n_events must be >= 0");
    if (p_lucky < 0.0 || p_lucky > 100.0) fail("p_lucky must be in [0, 100]");
    if (!std::isfinite(talent_mean)) fail("talent_mean must be finite");
    if (!(talent_std >= 0.0)) fail("talent_std must be >= 0");
    if (!(event_radius > 0.0)) fail("event_radius must be > 0");
    if (!(event_speed >= 0.0)) fail("event_speed must be >= 0");
    if (!(agent_speed >= 0.0)) fail("agent_speed must be >= 0");
    if (!std::isfinite(initial_wealth)) fail("initial_wealth must be finite");
    if (!(delta_wealth >= 0.0)) fail("delta_wealth must be >= 0");
    if (!(location_radius >= 0.0)) fail("location_radius must be >= 0");
    if (!(wealth_radius_mult >= 0.0)) fail("wealth_radius_mult must be >= 0");
    if (!(talent_radius_mult >= 0.0)) fail("talent_radius_mult must be >= 0");
    if (random_link_prob && (*random_link_prob < 0.0 || *random_link_prob > 1.0))
        fail("random_link_prob must be in [0, 1]");
    if (steps < 0) fail("steps must be >= 0");
}

int lucky_event_count(const SimParams& params) {
    return static_cast<int>(std::lround(params.n_events * params.p_lucky / 100.0));
}

WorldState init_world(const SimParams& params, std::uint64_t seed) {
    params.validate();

    WorldState world{params, {}, {}, {}, {}, 0, CounterRng(seed)};
    world.params.seed = seed;
    CounterRng& rng = world.rng;
    const double L = params.world_side;

    world.agents.resize(static_cast<std::size_t>(params.n_agents));
    for (int i = 0; i < params.n_agents; ++i) {
        Agent& a = world.agents[static_cast<std::size_t>(i)];
        a.id = i;
        const double x = rng.uniform() * L;
        const double y = rng.uniform() * L;
        a.pos = wrap(x, y, L);
        a.wealth = params.initial_wealth;
    }
    constexpr double kTalentClamp = 1e-6;
    for (int i = 0; i < params.n_agents; ++i) {
        double t = rng.normal(params.talent_mean, params.talent_std);
        world.agents[static_cast<std::size_t>(i)].talent =
            std::clamp(t, kTalentClamp, 1.0 - kTalentClamp);
    }

    const int n_lucky = lucky_event_count(params);
    world.events.resize(static_cast<std::size_t>(params.n_events));
    for (int e = 0; e < params.n_events; ++e) {
        EventCircle& ev = world.events[static_cast<std::size_t>(e)];
        ev.id = e;
        ev.kind = e < n_lucky ? EventKind::Lucky : EventKind::Unlucky;
        ev.radius = params.event_radius;
        const double x = rng.uniform() * L;
        const double y = rng.uniform() * L;
        ev.pos = wrap(x, y, L);
    }

    world.adjacency.assign(static_cast<std::size_t>(params.n_agents), {});

    // Pairs already intersecting at t=0 enter the contact set silently;
    // only a later disjoint-to-intersecting transition fires.
    world.contacts.assign(static_cast<std::size_t>(params.n_events), {});
    const double r2 = params.event_radius * params.event_radius;
    for (const EventCircle& ev : world.events) {
        auto& in_contact = world.contacts[static_cast<std::size_t>(ev.id)];
        for (const Agent& a : world.agents) {
            if (torus_distance_sq(ev.pos, a.pos, L) <= r2)
                in_contact.push_back(a.id);
        }
    }

    return world;
}

} // namespace luckgrid
