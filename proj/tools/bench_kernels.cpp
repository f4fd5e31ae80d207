#include <chrono>
#include <cstdio>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "luckgrid/engine.hpp"
#include "luckgrid/movement.hpp"
#include "luckgrid/network.hpp"

using namespace luckgrid;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double best_ms(F&& body, int repeat) {
    double best = 1e300;
    for (int i = 0; i < repeat; ++i) {
        const auto t0 = Clock::now();
        body();
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-24s  %10.3f  %10.3f  %7.2fx  %s\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                identical ? "identical" : "DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Timing comparison of the serial reference and OpenMP kernels"};
    int n_agents = 1000;
    int n_events = 500;
    int steps = 100;
    int repeat = 5;
    std::uint64_t seed = 1;
    app.add_option("--agents", n_agents, "Agent count");
    app.add_option("--events", n_events, "Event circle count");
    app.add_option("--steps", steps, "Steps for the full-run timing");
    app.add_option("--repeat", repeat, "Repetitions per timing (best-of)");
    app.add_option("--seed", seed, "World seed");
    CLI11_PARSE(app, argc, argv);

    SimParams params;
    params.n_agents = n_agents;
    params.n_events = n_events;
    params.steps = steps;
    params.seed = seed;

    WorldState world = init_world(params, seed);
    // A few steps spread wealth and talent bands apart so the threshold
    // kernels see realistic adjacency sizes.
    for (int s = 0; s < std::min(5, params.steps); ++s)
        step(world);

    std::printf("agents=%d events=%d threads=max repeat=%d (best-of)\n\n", n_agents,
                n_events, repeat);
    std::printf("%-24s  %10s  %10s  %8s\n", "kernel", "serial ms", "openmp ms", "speedup");

    for (const NetworkRule rule :
         {NetworkRule::Random, NetworkRule::Location, NetworkRule::Wealth,
          NetworkRule::Talent}) {
        SimParams p = world.params;
        p.network_rule = rule;
        Adjacency serial_out;
        Adjacency parallel_out;
        const double serial_ms = best_ms(
            [&] {
                CounterRng rng = world.rng;
                serial_out = build_adjacency(world.agents, p, rng, Exec::Serial);
            },
            repeat);
        const double parallel_ms = best_ms(
            [&] {
                CounterRng rng = world.rng;
                parallel_out = build_adjacency(world.agents, p, rng, Exec::Parallel);
            },
            repeat);
        report("adjacency/" + to_string(rule), serial_ms, parallel_ms,
               serial_out == parallel_out);
    }

    {
        ContactSet serial_out;
        ContactSet parallel_out;
        const double serial_ms = best_ms(
            [&] {
                serial_out = detect_contacts(world.events, world.agents,
                                             world.params.world_side, Exec::Serial);
            },
            repeat);
        const double parallel_ms = best_ms(
            [&] {
                parallel_out = detect_contacts(world.events, world.agents,
                                               world.params.world_side, Exec::Parallel);
            },
            repeat);
        report("contacts", serial_ms, parallel_ms, serial_out == parallel_out);
    }

    for (const MovementRule rule :
         {MovementRule::Random, MovementRule::Highest, MovementRule::Average}) {
        std::vector<TorusPoint> serial_out;
        std::vector<TorusPoint> parallel_out;
        const double serial_ms = best_ms(
            [&] {
                WorldState w = world;
                w.params.movement_rule = rule;
                serial_out = propose_moves(w, Exec::Serial);
            },
            repeat);
        const double parallel_ms = best_ms(
            [&] {
                WorldState w = world;
                w.params.movement_rule = rule;
                parallel_out = propose_moves(w, Exec::Parallel);
            },
            repeat);
        report("moves/" + to_string(rule), serial_ms, parallel_ms,
               serial_out == parallel_out);
    }

    {
        RunResult serial_out;
        RunResult parallel_out;
        const double serial_ms =
            best_ms([&] { serial_out = run(params, Exec::Serial); }, repeat);
        const double parallel_ms =
            best_ms([&] { parallel_out = run(params, Exec::Parallel); }, repeat);
        report("full run (" + std::to_string(steps) + " steps)", serial_ms, parallel_ms,
               serial_out.agents == parallel_out.agents);
    }
    return 0;
}
