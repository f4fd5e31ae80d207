#include "luckgrid/sweep.hpp"

#include <omp.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "luckgrid/csv_export.hpp"

namespace fs = std::filesystem;

namespace luckgrid {

std::vector<Combo> all_combos() {
    std::vector<Combo> combos;
    for (NetworkRule net : {NetworkRule::Random, NetworkRule::Location,
                            NetworkRule::Wealth, NetworkRule::Talent}) {
        for (MovementRule move :
             {MovementRule::Random, MovementRule::Highest, MovementRule::Average}) {
            combos.emplace_back(net, move);
        }
    }
    return combos;
}

std::uint64_t replicate_seed(const SweepSpec& spec, std::size_t combo_index, int replicate) {
    return spec.base_seed + combo_index * kComboSeedStride +
           static_cast<std::uint64_t>(replicate);
}

namespace {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void validate_spec(const SweepSpec& spec) {
    if (spec.combos.empty())
        throw std::invalid_argument("sweep: combos must be non-empty");
    if (spec.replicates < 1)
        throw std::invalid_argument("sweep: replicates must be >= 1");
    if (static_cast<std::uint64_t>(spec.replicates) >= kComboSeedStride)
        throw std::invalid_argument("sweep: replicates must stay below the seed stride");
    spec.base.validate();
}

} // namespace

std::vector<SummaryRow> run_sweep(const SweepSpec& spec, Exec exec, int jobs) {
    validate_spec(spec);

    const std::size_t n_combos = spec.combos.size();
    const auto reps = static_cast<std::size_t>(spec.replicates);
    const std::size_t n_runs = n_combos * reps;
    std::vector<SummaryMetrics> metrics(n_runs);

    std::atomic<bool> failed{false};
    std::mutex fail_mu;
    std::string fail_msg;

    auto run_one = [&](std::size_t flat) {
        if (failed.load(std::memory_order_relaxed))
            return;
        const std::size_t ci = flat / reps;
        const int k = static_cast<int>(flat % reps);
        const auto [net, move] = spec.combos[ci];
        const std::uint64_t seed = replicate_seed(spec, ci, k);
        try {
            SimParams p = spec.base;
            p.network_rule = net;
            p.movement_rule = move;
            p.seed = seed;
            const RunResult r = run(p, exec);
            export_run(r, spec.output_dir / r.run_id);
            metrics[flat] = r.summary;
        } catch (const std::exception& e) {
            bool expected = false;
            if (failed.compare_exchange_strong(expected, true)) {
                std::lock_guard lock(fail_mu);
                fail_msg = combo_label(net, move) + " seed " + std::to_string(seed) +
                           ": " + e.what();
            }
        }
    };

    if (jobs <= 1) {
        // No outer region, so the per-run kernels keep the whole
        // OpenMP thread budget to themselves.
        for (std::size_t flat = 0; flat < n_runs; ++flat)
            run_one(flat);
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (std::ptrdiff_t flat = 0; flat < static_cast<std::ptrdiff_t>(n_runs); ++flat)
            run_one(static_cast<std::size_t>(flat));
    }

    if (failed.load())
        throw std::runtime_error("sweep aborted: " + fail_msg);

    std::vector<SummaryRow> rows;
    rows.reserve(n_combos);
    for (std::size_t ci = 0; ci < n_combos; ++ci) {
        SummaryRow row;
        row.network_rule = spec.combos[ci].first;
        row.movement_rule = spec.combos[ci].second;
        row.replicates = spec.replicates;
        for (std::size_t k = 0; k < reps; ++k) {
            const SummaryMetrics& m = metrics[ci * reps + k];
            row.mean_wealth += m.mean_wealth;
            row.std_wealth += m.std_wealth;
            row.gini += m.gini;
        }
        row.mean_wealth /= static_cast<double>(reps);
        row.std_wealth /= static_cast<double>(reps);
        row.gini /= static_cast<double>(reps);
        rows.push_back(row);
    }

    write_summary_csv(rows, spec.output_dir / "summary.csv");
    return rows;
}

void write_summary_csv(const std::vector<SummaryRow>& rows, const fs::path& path) {
    std::string s = "network_rule,movement_rule,replicates,mean_wealth,std_wealth,gini\n";
    for (const SummaryRow& r : rows) {
        s += to_string(r.network_rule);
        s += ',';
        s += to_string(r.movement_rule);
        s += ',';
        s += std::to_string(r.replicates);
        s += ',';
        s += g17(r.mean_wealth);
        s += ',';
        s += g17(r.std_wealth);
        s += ',';
        s += g17(r.gini);
        s += '\n';
    }
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f)
        throw std::runtime_error(path.string() + ": cannot open for writing");
    const std::size_t n = std::fwrite(s.data(), 1, s.size(), f);
    const int rc = std::fclose(f);
    if (n != s.size() || rc != 0)
        throw std::runtime_error(path.string() + ": write failed");
}

std::vector<SummaryRow> read_summary_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error(path.string() + ": cannot open");
    std::string line;
    if (!std::getline(in, line) ||
        line != "network_rule,movement_rule,replicates,mean_wealth,std_wealth,gini")
        throw std::runtime_error(path.string() + ": not a summary.csv (bad header)");

    std::vector<SummaryRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string net, move, reps, mean, stdv, gini;
        const bool ok = std::getline(fields, net, ',') && std::getline(fields, move, ',') &&
                        std::getline(fields, reps, ',') && std::getline(fields, mean, ',') &&
                        std::getline(fields, stdv, ',') && std::getline(fields, gini);
        const auto at = path.string() + ":" + std::to_string(line_no);
        if (!ok)
            throw std::runtime_error(at + ": expected 6 comma-separated fields");
        SummaryRow row;
        const auto n = parse_network_rule(net);
        const auto m = parse_movement_rule(move);
        if (!n || !m)
            throw std::runtime_error(at + ": unknown rule '" + net + "," + move + "'");
        row.network_rule = *n;
        row.movement_rule = *m;
        try {
            row.replicates = std::stoi(reps);
            row.mean_wealth = std::stod(mean);
            row.std_wealth = std::stod(stdv);
            row.gini = std::stod(gini);
        } catch (const std::exception&) {
            throw std::runtime_error(at + ": malformed numeric field");
        }
        rows.push_back(row);
    }
    return rows;
}

std::string render_summary_table(const std::vector<SummaryRow>& rows) {
    std::size_t label_width = std::string("Rule").size();
    for (const SummaryRow& r : rows)
        label_width = std::max(label_width,
                               combo_label(r.network_rule, r.movement_rule).size());

    char buf[128];
    std::snprintf(buf, sizeof buf, "%-*s  %6s  %6s  %6s\n",
                  static_cast<int>(label_width), "Rule", "Mean", "Std", "Gini");
    std::string out = buf;
    for (const SummaryRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%-*s  %6.2f  %6.2f  %6.2f\n",
                      static_cast<int>(label_width),
                      combo_label(r.network_rule, r.movement_rule).c_str(),
                      r.mean_wealth, r.std_wealth, r.gini);
        out += buf;
    }
    return out;
}

int resolve_jobs(std::optional<int> flag) {
    if (flag)
        return std::max(1, *flag);
    if (const char* env = std::getenv("LUCKGRID_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1)
            return static_cast<int>(v);
    }
    return std::max(1, omp_get_max_threads());
}

} // namespace luckgrid
