#include "luckgrid/csv_export.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "luckgrid/stats.hpp"

namespace fs = std::filesystem;

namespace luckgrid {
namespace {

std::string g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f)
        throw std::runtime_error(path.string() + ": cannot open for writing");
    const std::size_t n = std::fwrite(content.data(), 1, content.size(), f);
    const int rc = std::fclose(f);
    if (n != content.size() || rc != 0)
        throw std::runtime_error(path.string() + ": write failed");
}

std::string agents_csv(const RunResult& r) {
    std::string s = "run_id,seed,agent_id,talent,wealth_magnitude,lucky_hits,unlucky_hits,x,y\n";
    const std::string prefix = r.run_id + "," + std::to_string(r.seed) + ",";
    for (const Agent& a : r.agents) {
        s += prefix;
        s += std::to_string(a.id);
        s += ',';
        s += g6(a.talent);
        s += ',';
        s += g6(a.wealth);
        s += ',';
        s += std::to_string(a.lucky_hits);
        s += ',';
        s += std::to_string(a.unlucky_hits);
        s += ',';
        s += g6(a.pos.x);
        s += ',';
        s += g6(a.pos.y);
        s += '\n';
    }
    return s;
}

std::string timeseries_csv(const RunResult& r) {
    std::string s = "step,mean_wealth,std_wealth,gini\n";
    for (const StepMetrics& m : r.series) {
        s += std::to_string(m.step);
        s += ',';
        s += g6(m.mean_wealth);
        s += ',';
        s += g6(m.std_wealth);
        s += ',';
        s += g6(m.gini);
        s += '\n';
    }
    return s;
}

std::string event_hist_csv(const RunResult& r, EventKind kind) {
    std::string s = "n_events,count\n";
    const std::vector<long long> bins = event_histogram(r.agents, kind);
    for (std::size_t b = 0; b < bins.size(); ++b) {
        s += std::to_string(b);
        s += ',';
        s += std::to_string(bins[b]);
        s += '\n';
    }
    return s;
}

std::string wealth_hist_csv(const RunResult& r) {
    // Fixed-width bins of one wealth increment; bin k covers
    // [k*width, (k+1)*width). Falls back to width 1 when the increment
    // is zero. The epsilon keeps exact multiples in their own bin.
    const double dc = r.params.delta_wealth;
    const double width = dc > 0.0 ? dc : 1.0;
    auto bin_of = [width](double w) {
        return static_cast<long long>(std::floor(w / width + 1e-9));
    };
    long long lo = 0;
    long long hi = 0;
    bool first = true;
    for (const Agent& a : r.agents) {
        const long long b = bin_of(a.wealth);
        if (first) {
            lo = hi = b;
            first = false;
        } else {
            lo = std::min(lo, b);
            hi = std::max(hi, b);
        }
    }
    std::vector<long long> counts(first ? 0 : static_cast<std::size_t>(hi - lo + 1), 0);
    for (const Agent& a : r.agents)
        ++counts[static_cast<std::size_t>(bin_of(a.wealth) - lo)];

    std::string s = "bin_lower,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        s += g6((lo + static_cast<long long>(i)) * width);
        s += ',';
        s += std::to_string(counts[i]);
        s += '\n';
    }
    return s;
}

} // namespace

void export_run(const RunResult& result, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error(dir.string() + ": " + ec.message());
    write_file(dir / "agents.csv", agents_csv(result));
    write_file(dir / "timeseries.csv", timeseries_csv(result));
    write_file(dir / "lucky_hist.csv", event_hist_csv(result, EventKind::Lucky));
    write_file(dir / "unlucky_hist.csv", event_hist_csv(result, EventKind::Unlucky));
    write_file(dir / "wealth_hist.csv", wealth_hist_csv(result));
}

} // namespace luckgrid
