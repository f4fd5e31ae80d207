#include "luckgrid/network.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "luckgrid/geometry.hpp"

namespace luckgrid {

namespace {

/// Reference path: walk unordered pairs i < j and append both directions.
/// Rows come out sorted because j ascends for row i and i ascends for the
/// incoming half of row j.
template <class Pred>
Adjacency build_pairs_serial(std::size_t n, Pred&& linked) {
    Adjacency adj(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (linked(i, j)) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
        }
    }
    return adj;
}

/// OpenMP path: rows of the upper triangle are independent, so each
/// thread owns its rows; a serial transpose then mirrors the links into
/// full sorted rows. Output is identical to the serial path for any
/// thread count.
template <class Pred>
Adjacency build_pairs_parallel(std::size_t n, Pred&& linked) {
    std::vector<std::vector<int>> upper(n);
    const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(n) - 1;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < last; ++i) {
        auto& row = upper[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
            if (linked(static_cast<std::size_t>(i), j))
                row.push_back(static_cast<int>(j));
        }
    }

    Adjacency adj(n);
    std::vector<std::size_t> incoming(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (int j : upper[i])
            ++incoming[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < n; ++i)
        adj[i].reserve(upper[i].size() + incoming[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (int j : upper[i])
            adj[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < n; ++i)
        adj[i].insert(adj[i].end(), upper[i].begin(), upper[i].end());
    return adj;
}

template <class Pred>
Adjacency build_pairs(std::size_t n, Exec exec, Pred&& linked) {
    return exec == Exec::Serial ? build_pairs_serial(n, linked)
                                : build_pairs_parallel(n, linked);
}

} // namespace

std::uint64_t pair_rank(int i, int j, int n) {
    const auto ui = static_cast<std::uint64_t>(i);
    const auto un = static_cast<std::uint64_t>(n);
    return ui * (2 * un - ui - 1) / 2 + static_cast<std::uint64_t>(j - i - 1);
}

Adjacency build_random(const std::vector<Agent>& agents, double link_prob,
                       CounterRng& rng, Exec exec) {
    if (link_prob < 0.0 || link_prob > 1.0)
        throw std::invalid_argument("build_random: link_prob must be in [0, 1]");
    const std::size_t n = agents.size();
    const auto total_pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;

    if (exec == Exec::Serial) {
        return build_pairs_serial(n, [&](std::size_t, std::size_t) {
            return rng.uniform() < link_prob;
        });
    }

    const std::uint64_t seed = rng.seed();
    const std::uint64_t base = rng.counter();
    const int ni = static_cast<int>(n);
    Adjacency adj = build_pairs_parallel(n, [&](std::size_t i, std::size_t j) {
        const std::uint64_t idx =
            base + pair_rank(static_cast<int>(i), static_cast<int>(j), ni);
        return CounterRng::uniform_at(seed, idx) < link_prob;
    });
    rng.skip(total_pairs);
    return adj;
}

Adjacency build_location(const std::vector<Agent>& agents, double radius,
                         double world_side, Exec exec) {
    const double r2 = radius * radius;
    return build_pairs(agents.size(), exec, [&](std::size_t i, std::size_t j) {
        return torus_distance_sq(agents[i].pos, agents[j].pos, world_side) <= r2;
    });
}

Adjacency build_wealth(const std::vector<Agent>& agents, double mult,
                       double delta_wealth, Exec exec) {
    const double band = mult * delta_wealth;
    return build_pairs(agents.size(), exec, [&](std::size_t i, std::size_t j) {
        return std::fabs(agents[i].wealth - agents[j].wealth) <= band;
    });
}

Adjacency build_talent(const std::vector<Agent>& agents, double mult,
                       double talent_std, Exec exec) {
    const double band = mult * talent_std;
    return build_pairs(agents.size(), exec, [&](std::size_t i, std::size_t j) {
        return std::fabs(agents[i].talent - agents[j].talent) <= band;
    });
}

Adjacency build_adjacency(const std::vector<Agent>& agents, const SimParams& params,
                          CounterRng& rng, Exec exec) {
    switch (params.network_rule) {
    case NetworkRule::Random:
        return build_random(agents, params.effective_link_prob(), rng, exec);
    case NetworkRule::Location:
        return build_location(agents, params.location_radius, params.world_side, exec);
    case NetworkRule::Wealth:
        return build_wealth(agents, params.wealth_radius_mult, params.delta_wealth, exec);
    case NetworkRule::Talent:
        return build_talent(agents, params.talent_radius_mult, params.talent_std, exec);
    }
    throw std::logic_error("build_adjacency: unknown rule");
}

} // namespace luckgrid
