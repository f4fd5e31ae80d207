// Acceptance gate: every release criterion, one printed line each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "luckgrid/csv_export.hpp"
#include "luckgrid/engine.hpp"
#include "luckgrid/geometry.hpp"
#include "luckgrid/network.hpp"
#include "luckgrid/stats.hpp"
#include "luckgrid/sweep.hpp"
#include "oracles.hpp"

using namespace luckgrid;
namespace fs = std::filesystem;

namespace {

int failures = 0;

std::string strf(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

void report(int index, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s\n", pass ? "PASS" : "FAIL", index, detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

struct RunRecord {
    double mean = 0.0;
    double stddev = 0.0;
    double gini = 0.0;
};

struct ReferenceRow {
    double mean;
    double stddev;
    double gini;
};

// Frozen reference baseline for the 12 combos, in all_combos() order.
constexpr ReferenceRow kReference[12] = {
    {4.82, 1.24, 0.13}, // Random-Random
    {4.75, 1.33, 0.13}, // Random-Highest
    {4.75, 1.10, 0.12}, // Random-Average
    {4.79, 0.94, 0.10}, // Location-Random
    {4.70, 0.83, 0.09}, // Location-Highest
    {4.78, 1.04, 0.11}, // Location-Average
    {4.82, 1.32, 0.13}, // Wealth-Random
    {4.76, 1.09, 0.12}, // Wealth-Highest
    {4.82, 1.15, 0.12}, // Wealth-Average
    {4.78, 1.18, 0.12}, // Talent-Random
    {4.74, 0.99, 0.11}, // Talent-Highest
    {4.74, 1.02, 0.11}, // Talent-Average
};

constexpr double kMeanTol = 0.15;
constexpr double kStdTol = 0.25;
constexpr double kGiniTol = 0.03;

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool same_tree(const fs::path& a, const fs::path& b, std::string& first_diff) {
    std::vector<fs::path> rel_a;
    for (const auto& entry : fs::recursive_directory_iterator(a))
        if (entry.is_regular_file())
            rel_a.push_back(fs::relative(entry.path(), a));
    std::sort(rel_a.begin(), rel_a.end());
    std::vector<fs::path> rel_b;
    for (const auto& entry : fs::recursive_directory_iterator(b))
        if (entry.is_regular_file())
            rel_b.push_back(fs::relative(entry.path(), b));
    std::sort(rel_b.begin(), rel_b.end());
    if (rel_a != rel_b) {
        first_diff = "file sets differ";
        return false;
    }
    for (const fs::path& rel : rel_a) {
        if (slurp(a / rel) != slurp(b / rel)) {
            first_diff = rel.string();
            return false;
        }
    }
    return true;
}

int argmax_wealth(const std::vector<Agent>& agents) {
    int best = 0;
    for (const Agent& a : agents)
        if (a.wealth > agents[static_cast<std::size_t>(best)].wealth)
            best = a.id;
    return best;
}

int argmax_talent(const std::vector<Agent>& agents) {
    int best = 0;
    for (const Agent& a : agents)
        if (a.talent > agents[static_cast<std::size_t>(best)].talent)
            best = a.id;
    return best;
}

void pool_histogram(std::vector<long long>& pool, const std::vector<long long>& h) {
    if (h.size() > pool.size())
        pool.resize(h.size(), 0);
    for (std::size_t b = 0; b < h.size(); ++b)
        pool[b] += h[b];
}

} // namespace

int main() {
    const fs::path work = fs::temp_directory_path() / "luckgrid_acceptance";
    fs::remove_all(work);
    fs::create_directories(work);

    // ---- The full default-parameter grid: 12 combos x 10 seeds. ----
    const auto combos = all_combos();
    const int reps = 10;
    SweepSpec grid_spec; // only used for the seed formula here
    grid_spec.base_seed = 1;

    std::vector<std::vector<RunRecord>> records(combos.size());
    std::vector<long long> rr_lucky_pool;
    std::vector<long long> rr_unlucky_pool;
    ExpFit rr_first_lucky{};
    ExpFit rr_first_unlucky{};
    long long conservation_checked = 0;
    long long conservation_violations = 0;
    int wealth_talent_runs = 0;
    int wealth_talent_distinct = 0;

    std::printf("running %zu combos x %d seeds at full defaults...\n", combos.size(), reps);
    for (std::size_t ci = 0; ci < combos.size(); ++ci) {
        for (int k = 0; k < reps; ++k) {
            SimParams p;
            p.network_rule = combos[ci].first;
            p.movement_rule = combos[ci].second;
            p.seed = replicate_seed(grid_spec, ci, k);
            const RunResult r = run(p, Exec::Parallel);
            records[ci].push_back(
                {r.summary.mean_wealth, r.summary.std_wealth, r.summary.gini});

            for (const Agent& a : r.agents) {
                ++conservation_checked;
                const double expected =
                    p.initial_wealth + p.delta_wealth * (a.lucky_gains - a.unlucky_hits);
                if (a.wealth != expected || a.lucky_gains > a.lucky_hits)
                    ++conservation_violations;
            }
            if (ci < 4) { // first 40 runs of the grid
                ++wealth_talent_runs;
                if (argmax_wealth(r.agents) != argmax_talent(r.agents))
                    ++wealth_talent_distinct;
            }
            if (ci == 0) {
                pool_histogram(rr_lucky_pool, event_histogram(r.agents, EventKind::Lucky));
                pool_histogram(rr_unlucky_pool,
                               event_histogram(r.agents, EventKind::Unlucky));
                if (k == 0) {
                    rr_first_lucky =
                        fit_exponential(event_histogram(r.agents, EventKind::Lucky));
                    rr_first_unlucky =
                        fit_exponential(event_histogram(r.agents, EventKind::Unlucky));
                }
            }
        }
        const auto& rec = records[ci];
        double m = 0, s = 0, g = 0;
        for (const RunRecord& x : rec) {
            m += x.mean;
            s += x.stddev;
            g += x.gini;
        }
        m /= reps;
        s /= reps;
        g /= reps;
        const bool in_band = std::fabs(m - kReference[ci].mean) <= kMeanTol &&
                             std::fabs(s - kReference[ci].stddev) <= kStdTol &&
                             std::fabs(g - kReference[ci].gini) <= kGiniTol;
        std::printf("  %-18s mean %.3f  std %.3f  gini %.3f   (ref %.2f %.2f %.2f)  %s\n",
                    combo_label(combos[ci].first, combos[ci].second).c_str(), m, s, g,
                    kReference[ci].mean, kReference[ci].stddev, kReference[ci].gini,
                    in_band ? "ok" : "OUT");
        std::fflush(stdout);
    }

    // ---- 1. Grid averages within tolerance of the reference table. ----
    {
        double worst_mean = 0, worst_std = 0, worst_gini = 0;
        int rows_in_band = 0;
        for (std::size_t ci = 0; ci < combos.size(); ++ci) {
            double m = 0, s = 0, g = 0;
            for (const RunRecord& x : records[ci]) {
                m += x.mean;
                s += x.stddev;
                g += x.gini;
            }
            m /= reps;
            s /= reps;
            g /= reps;
            const double em = std::fabs(m - kReference[ci].mean);
            const double es = std::fabs(s - kReference[ci].stddev);
            const double eg = std::fabs(g - kReference[ci].gini);
            if (em <= kMeanTol && es <= kStdTol && eg <= kGiniTol)
                ++rows_in_band;
            worst_mean = std::max(worst_mean, em);
            worst_std = std::max(worst_std, es);
            worst_gini = std::max(worst_gini, eg);
        }
        report(1, rows_in_band == 12,
               strf("wealth table: %d/12 combos in band; worst |mean err| %.3f (tol %.2f), "
                    "|std err| %.3f (tol %.2f), |gini err| %.4f (tol %.2f)",
                    rows_in_band, worst_mean, kMeanTol, worst_std, kStdTol, worst_gini,
                    kGiniTol));
    }

    // ---- 2. Location-Highest beats Random-Random seed by seed. ----
    {
        int wins = 0;
        std::string pairs;
        for (int k = 0; k < reps; ++k) {
            SimParams p;
            p.network_rule = NetworkRule::Location;
            p.movement_rule = MovementRule::Highest;
            p.seed = static_cast<std::uint64_t>(1 + k); // same seeds as the RR replicates
            const RunResult lh = run(p, Exec::Parallel);
            const double rr_gini = records[0][static_cast<std::size_t>(k)].gini;
            if (lh.summary.gini < rr_gini)
                ++wins;
            pairs += strf(" %.3f/%.3f", lh.summary.gini, rr_gini);
        }
        std::printf("  (gini LH/RR per seed:%s)\n", pairs.c_str());
        report(2, wins >= 9,
               strf("gini ordering: Location-Highest < Random-Random in %d/10 paired seeds "
                    "(need >= 9)",
                    wins));
    }

    // ---- 3. Hit histograms decay exponentially with similar exponents. ----
    {
        const ExpFit lucky = fit_exponential(rr_lucky_pool);
        const ExpFit unlucky = fit_exponential(rr_unlucky_pool);
        const double gap = std::fabs(lucky.slope - unlucky.slope) /
                           std::max(std::fabs(lucky.slope), std::fabs(unlucky.slope));
        const bool pass = lucky.slope < 0.0 && unlucky.slope < 0.0 &&
                          lucky.r_squared >= 0.9 && unlucky.r_squared >= 0.9 && gap <= 0.25;
        std::printf("  (single-run fits, seed 1: lucky slope %.3f r2 %.3f, unlucky slope "
                    "%.3f r2 %.3f)\n",
                    rr_first_lucky.slope, rr_first_lucky.r_squared, rr_first_unlucky.slope,
                    rr_first_unlucky.r_squared);
        report(3, pass,
               strf("event histograms (Random-Random, 10 runs pooled): lucky slope %.3f "
                    "r2 %.3f, unlucky slope %.3f r2 %.3f, slope gap %.1f%% <= 25%%",
                    lucky.slope, lucky.r_squared, unlucky.slope, unlucky.r_squared,
                    gap * 100.0));
    }

    // ---- 4. The wealthiest agent is rarely the most talented. ----
    {
        const double frac =
            static_cast<double>(wealth_talent_distinct) / wealth_talent_runs;
        report(4, frac >= 0.95,
               strf("wealthiest != most talented in %d/%d runs (%.0f%%, need >= 95%%)",
                    wealth_talent_distinct, wealth_talent_runs, frac * 100.0));
    }

    // ---- 5. Byte-level determinism. ----
    {
        SimParams p; // full defaults, seed 1
        const fs::path run_a = work / "det_run_a";
        const fs::path run_b = work / "det_run_b";
        export_run(run(p, Exec::Parallel), run_a);
        export_run(run(p, Exec::Parallel), run_b);
        const bool run_same = slurp(run_a / "agents.csv") == slurp(run_b / "agents.csv") &&
                              slurp(run_a / "timeseries.csv") ==
                                  slurp(run_b / "timeseries.csv");

        SweepSpec spec;
        spec.base.n_agents = 200;
        spec.base.n_events = 100;
        spec.base.steps = 30;
        spec.replicates = 2;
        spec.base_seed = 5;
        spec.output_dir = work / "det_sweep_j1";
        run_sweep(spec, Exec::Parallel, 1);
        const fs::path j1 = spec.output_dir;
        spec.output_dir = work / "det_sweep_j4";
        run_sweep(spec, Exec::Parallel, 4);
        std::string diff;
        const bool sweep_same = same_tree(j1, spec.output_dir, diff);

        report(5, run_same && sweep_same,
               strf("determinism: repeated default run byte-identical (%s); sweep "
                    "--jobs 1 vs 4 identical over 24 runs (%s)",
                    run_same ? "yes" : "no",
                    sweep_same ? "yes" : ("differs at " + diff).c_str()));
    }

    // ---- 6. Metrics and builders agree with independent oracles. ----
    {
        CounterRng rng(606);
        double worst_gini_gap = 0.0;
        double worst_area_gap = 0.0;
        for (int t = 0; t < 100; ++t) {
            const int n = 2 + static_cast<int>(rng.uniform() * 498);
            std::vector<double> v;
            for (int i = 0; i < n; ++i)
                v.push_back(rng.uniform() * 10.0);
            const double g = *gini(v);
            worst_gini_gap = std::max(worst_gini_gap, std::fabs(g - oracle::gini_pairwise(v)));
            worst_area_gap =
                std::max(worst_area_gap, std::fabs(g - oracle::gini_lorenz_area(v)));
        }

        int world_mismatches = 0;
        for (int t = 0; t < 50; ++t) {
            const int n = 20 + static_cast<int>(rng.uniform() * 180);
            std::vector<Agent> agents(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                Agent& a = agents[static_cast<std::size_t>(i)];
                a.id = i;
                a.pos = {rng.uniform() * 200.0, rng.uniform() * 200.0};
                a.talent = rng.uniform();
                a.wealth = 3.0 + rng.uniform() * 4.0;
            }
            const bool ok =
                build_location(agents, 5.0, 200.0) ==
                    oracle::adjacency_brute(agents.size(),
                                            [&](std::size_t i, std::size_t j) {
                                                return oracle::torus_distance_images(
                                                           agents[i].pos, agents[j].pos,
                                                           200.0) <= 5.0;
                                            }) &&
                build_wealth(agents, 3.0, 0.5) ==
                    oracle::adjacency_brute(agents.size(),
                                            [&](std::size_t i, std::size_t j) {
                                                return std::fabs(agents[i].wealth -
                                                                 agents[j].wealth) <= 1.5;
                                            }) &&
                build_talent(agents, 1.0, 0.1) ==
                    oracle::adjacency_brute(agents.size(),
                                            [&](std::size_t i, std::size_t j) {
                                                return std::fabs(agents[i].talent -
                                                                 agents[j].talent) <= 0.1;
                                            });
            if (!ok)
                ++world_mismatches;
        }
        const bool pass = worst_gini_gap <= 1e-10 && worst_area_gap <= 1e-9 &&
                          world_mismatches == 0;
        report(6, pass,
               strf("oracles: gini sorted vs pairwise %.2e <= 1e-10, vs lorenz area "
                    "%.2e <= 1e-9, builder mismatches %d/50 worlds",
                    worst_gini_gap, worst_area_gap, world_mismatches));
    }

    // ---- 7. Wealth ledger identity on every grid run. ----
    {
        report(7, conservation_violations == 0,
               strf("conservation: %lld violations across %lld agent ledgers",
                    conservation_violations, conservation_checked));
    }

    // ---- 8. Geometry property sweep. ----
    {
        CounterRng rng(808);
        const double L = 200.0;
        int bad = 0;
        for (int t = 0; t < 2000; ++t) {
            const TorusPoint a{rng.uniform() * L, rng.uniform() * L};
            const TorusPoint b{rng.uniform() * L, rng.uniform() * L};
            const TorusPoint c{rng.uniform() * L, rng.uniform() * L};
            const double ab = torus_distance(a, b, L);
            if (ab != torus_distance(b, a, L))
                ++bad;
            if (torus_distance(a, a, L) != 0.0)
                ++bad;
            if (ab > torus_distance(a, c, L) + torus_distance(c, b, L) + 1e-9)
                ++bad;
            const TorusPoint w = wrap((rng.uniform() - 0.5) * 4000.0,
                                      (rng.uniform() - 0.5) * 4000.0, L);
            if (!(wrap(w, L) == w) || w.x < 0.0 || w.x >= L || w.y < 0.0 || w.y >= L)
                ++bad;
            const double step_len = rng.uniform() * 3.0;
            const TorusPoint moved = step_toward(a, b, step_len, L);
            if (torus_distance(moved, b, L) > ab + 1e-9)
                ++bad;
        }
        for (int t = 0; t < 1000; ++t) {
            const int n = 1 + static_cast<int>(rng.uniform() * 6);
            std::vector<TorusPoint> pts;
            std::vector<double> wts;
            for (int i = 0; i < n; ++i) {
                pts.push_back({rng.uniform() * L, rng.uniform() * L});
                wts.push_back(0.1 + rng.uniform());
            }
            const double tx = rng.uniform() * L;
            const double ty = rng.uniform() * L;
            std::vector<TorusPoint> shifted;
            for (const TorusPoint& p : pts)
                shifted.push_back(wrap(p.x + tx, p.y + ty, L));
            const TorusPoint m0 = circular_weighted_mean(pts, wts, L);
            const TorusPoint m1 = circular_weighted_mean(shifted, wts, L);
            if (torus_distance(m1, wrap(m0.x + tx, m0.y + ty, L), L) > 1e-9)
                ++bad;
        }
        report(8, bad == 0,
               strf("geometry properties: %d violations over 3000 random cases", bad));
    }

    std::printf("%s\n", failures == 0 ? "all criteria passed"
                                      : strf("%d criteria FAILED", failures).c_str());
    return failures;
}
