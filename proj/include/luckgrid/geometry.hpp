#pragma once

#include <span>
#include <vector>

namespace luckgrid {

/// A position on the periodic square world of side L. Both coordinates
/// live in [0, L) after every operation that returns a TorusPoint.
struct TorusPoint {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const TorusPoint&) const = default;
};

/// Reduce a raw point into [0, L) per axis. Throws std::invalid_argument
/// on non-finite coordinates or L <= 0.
TorusPoint wrap(double x, double y, double world_side);
TorusPoint wrap(const TorusPoint& p, double world_side);

/// Shortest (wrap-aware) Euclidean distance between two points.
double torus_distance(const TorusPoint& a, const TorusPoint& b, double world_side);

/// Squared shortest distance; the comparison form used by the hot loops.
double torus_distance_sq(const TorusPoint& a, const TorusPoint& b, double world_side);

/// Signed per-axis displacement from `a` to `b` along the shortest path,
/// each component in [-L/2, L/2].
TorusPoint torus_delta(const TorusPoint& a, const TorusPoint& b, double world_side);

/// Move `step` along the torus-shortest direction toward `target`.
/// Arrives exactly when the remaining distance is <= step. A degenerate
/// call (from == target) returns `from` unchanged.
TorusPoint step_toward(const TorusPoint& from, const TorusPoint& target,
                       double step, double world_side);

/// Weighted circular mean: per axis, map coordinates to angles 2*pi*c/L,
/// take the weighted vector mean, and map the resultant angle back to
/// [0, L). An axis whose resultant vanishes (perfectly antipodal mass)
/// falls back to the unweighted arithmetic mean of the raw coordinates,
/// wrapped. Throws std::invalid_argument for empty input, mismatched
/// lengths, a negative weight, or total weight <= 0.
TorusPoint circular_weighted_mean(std::span<const TorusPoint> points,
                                  std::span<const double> weights,
                                  double world_side);

} // namespace luckgrid
