#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "luckgrid/model.hpp"

namespace luckgrid {

struct SummaryMetrics {
    double mean_wealth = 0.0;
    double std_wealth = 0.0;
    double gini = 0.0; // NaN when undefined (mean <= 0)
};

struct LorenzPoint {
    double population_share = 0.0;
    double wealth_share = 0.0;
};

/// Log-linear least-squares fit of a histogram tail. For a constant
/// series the residual and total variation are both zero; that 0/0 is
/// reported as r_squared = 1 with slope 0 (a flat series is fit
/// perfectly by a flat line).
struct ExpFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Arithmetic mean and population standard deviation (divide by n).
/// Throws std::invalid_argument on an empty list.
std::pair<double, double> mean_std(std::span<const double> values);

/// Gini coefficient via the sorted formula
///   G = sum_i (2i - n - 1) x_(i) / (n^2 mu),  x ascending, i 1-based.
/// Returns nullopt when the mean is <= 0 (metric undefined, reported as
/// missing rather than 0). Throws std::invalid_argument on empty input.
std::optional<double> gini(std::span<const double> values);

/// Lorenz curve points (population share, wealth share), ascending sort,
/// prefixed with (0,0) and ending exactly at (1,1). Throws
/// std::invalid_argument on empty input, any negative value, or zero sum.
std::vector<LorenzPoint> lorenz(std::span<const double> values);

/// counts[b] = number of agents whose hit counter equals b, b = 0..max.
std::vector<long long> event_histogram(std::span<const Agent> agents, EventKind which);

/// OLS of ln(count) against bin index over bins with count > 0. Throws
/// std::invalid_argument when fewer than 2 bins are positive.
ExpFit fit_exponential(std::span<const double> counts);
ExpFit fit_exponential(std::span<const long long> counts);

/// Mean, population std, and Gini (NaN when undefined) in one call.
SummaryMetrics summarize(std::span<const double> values);

} // namespace luckgrid
