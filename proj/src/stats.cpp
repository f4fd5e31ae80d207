#include "luckgrid/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace luckgrid {

std::pair<double, double> mean_std(std::span<const double> values) {
    if (values.empty())
        throw std::invalid_argument("mean_std: empty input");
    const auto n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values)
        sum += v;
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : values)
        ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / n)};
}

std::optional<double> gini(std::span<const double> values) {
    if (values.empty())
        throw std::invalid_argument("gini: empty input");
    const auto n = values.size();
    double sum = 0.0;
    for (double v : values)
        sum += v;
    const double mean = sum / static_cast<double>(n);
    if (!(mean > 0.0))
        return std::nullopt;

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double coeff = 2.0 * static_cast<double>(i + 1) - static_cast<double>(n) - 1.0;
        acc += coeff * sorted[i];
    }
    return acc / (static_cast<double>(n) * static_cast<double>(n) * mean);
}

std::vector<LorenzPoint> lorenz(std::span<const double> values) {
    if (values.empty())
        throw std::invalid_argument("lorenz: empty input");
    std::vector<double> sorted(values.begin(), values.end());
    double total = 0.0;
    for (double v : sorted) {
        if (v < 0.0)
            throw std::invalid_argument("lorenz: negative value");
        total += v;
    }
    if (!(total > 0.0))
        throw std::invalid_argument("lorenz: total must be > 0");
    std::sort(sorted.begin(), sorted.end());

    const auto n = sorted.size();
    std::vector<LorenzPoint> curve;
    curve.reserve(n + 1);
    curve.push_back({0.0, 0.0});
    double cum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        cum += sorted[k];
        curve.push_back({static_cast<double>(k + 1) / static_cast<double>(n), cum / total});
    }
    curve.back() = {1.0, 1.0};
    return curve;
}

std::vector<long long> event_histogram(std::span<const Agent> agents, EventKind which) {
    if (agents.empty())
        return {};
    int max_hits = 0;
    for (const Agent& a : agents) {
        const int h = which == EventKind::Lucky ? a.lucky_hits : a.unlucky_hits;
        max_hits = std::max(max_hits, h);
    }
    std::vector<long long> counts(static_cast<std::size_t>(max_hits) + 1, 0);
    for (const Agent& a : agents) {
        const int h = which == EventKind::Lucky ? a.lucky_hits : a.unlucky_hits;
        ++counts[static_cast<std::size_t>(h)];
    }
    return counts;
}

ExpFit fit_exponential(std::span<const double> counts) {
    std::vector<double> xs, ys;
    for (std::size_t b = 0; b < counts.size(); ++b) {
        if (counts[b] > 0.0) {
            xs.push_back(static_cast<double>(b));
            ys.push_back(std::log(counts[b]));
        }
    }
    if (xs.size() < 2)
        throw std::invalid_argument("fit_exponential: fewer than 2 positive bins");

    const auto n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sxy += (xs[k] - mx) * (ys[k] - my);
        sxx += (xs[k] - mx) * (xs[k] - mx);
        syy += (ys[k] - my) * (ys[k] - my);
    }

    ExpFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy <= 0.0) {
        fit.r_squared = 1.0;
        return fit;
    }
    double ss_res = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double resid = ys[k] - (fit.intercept + fit.slope * xs[k]);
        ss_res += resid * resid;
    }
    fit.r_squared = 1.0 - ss_res / syy;
    return fit;
}

ExpFit fit_exponential(std::span<const long long> counts) {
    std::vector<double> as_double(counts.begin(), counts.end());
    return fit_exponential(std::span<const double>{as_double});
}

SummaryMetrics summarize(std::span<const double> values) {
    const auto [mean, stddev] = mean_std(values);
    const auto g = gini(values);
    return {mean, stddev, g ? *g : std::numeric_limits<double>::quiet_NaN()};
}

} // namespace luckgrid
