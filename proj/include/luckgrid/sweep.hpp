#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "luckgrid/engine.hpp"

namespace luckgrid {

using Combo = std::pair<NetworkRule, MovementRule>;

/// The 12 strategy combinations, network rule outer, movement rule inner:
/// Random-Random, Random-Highest, ... Talent-Average.
std::vector<Combo> all_combos();

struct SweepSpec {
    SimParams base;             // seed/network/movement overridden per run
    std::vector<Combo> combos = all_combos();
    int replicates = 10;
    std::uint64_t base_seed = 1;
    std::filesystem::path output_dir;
};

/// Seed stride between combos; replicate seeds never collide as long as
/// replicates stays below it.
inline constexpr std::uint64_t kComboSeedStride = 1'000'000;

/// Seed for replicate k (0-based) of combo index c:
/// base_seed + c * kComboSeedStride + k.
std::uint64_t replicate_seed(const SweepSpec& spec, std::size_t combo_index, int replicate);

/// One summary.csv row: final-step metrics averaged over replicates.
struct SummaryRow {
    NetworkRule network_rule = NetworkRule::Random;
    MovementRule movement_rule = MovementRule::Random;
    int replicates = 0;
    double mean_wealth = 0.0;
    double std_wealth = 0.0;
    double gini = 0.0;

    bool operator==(const SummaryRow&) const = default;
};

/// Runs every combo x replicate, exporting each run into
/// output_dir/<run_id>/ and writing output_dir/summary.csv. Runs execute
/// concurrently across up to `jobs` workers; output bytes do not depend
/// on jobs. Any run failure aborts with the failing combo and seed.
std::vector<SummaryRow> run_sweep(const SweepSpec& spec, Exec exec = Exec::Parallel,
                                  int jobs = 1);

void write_summary_csv(const std::vector<SummaryRow>& rows,
                       const std::filesystem::path& path);
std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path);

/// Aligned fixed-point table of the summary rows.
std::string render_summary_table(const std::vector<SummaryRow>& rows);

/// Worker count: explicit flag if set, else the LUCKGRID_JOBS environment
/// variable, else the OpenMP default. Always at least 1.
int resolve_jobs(std::optional<int> flag);

} // namespace luckgrid
