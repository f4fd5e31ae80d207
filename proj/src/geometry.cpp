#include "luckgrid/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace luckgrid {

namespace {

double wrap_coord(double c, double world_side) {
    double r = std::fmod(c, world_side);
    if (r < 0.0)
        r += world_side;
    // fmod of a tiny negative can land exactly on world_side after the add
    if (r >= world_side)
        r = 0.0;
    return r;
}

double axis_delta(double from, double to, double world_side) {
    // Signed shortest displacement, in [-L/2, L/2].
    double d = std::remainder(to - from, world_side);
    return d;
}

} // namespace

TorusPoint wrap(double x, double y, double world_side) {
    if (!(world_side > 0.0))
        throw std::invalid_argument("wrap: world side must be > 0");
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("wrap: non-finite coordinate");
    return {wrap_coord(x, world_side), wrap_coord(y, world_side)};
}

TorusPoint wrap(const TorusPoint& p, double world_side) {
    return wrap(p.x, p.y, world_side);
}

double torus_distance_sq(const TorusPoint& a, const TorusPoint& b, double world_side) {
    double dx = std::fabs(a.x - b.x);
    if (dx > world_side - dx)
        dx = world_side - dx;
    double dy = std::fabs(a.y - b.y);
    if (dy > world_side - dy)
        dy = world_side - dy;
    return dx * dx + dy * dy;
}

double torus_distance(const TorusPoint& a, const TorusPoint& b, double world_side) {
    return std::sqrt(torus_distance_sq(a, b, world_side));
}

TorusPoint torus_delta(const TorusPoint& a, const TorusPoint& b, double world_side) {
    return {axis_delta(a.x, b.x, world_side), axis_delta(a.y, b.y, world_side)};
}

TorusPoint step_toward(const TorusPoint& from, const TorusPoint& target,
                       double step, double world_side) {
    if (step < 0.0)
        throw std::invalid_argument("step_toward: negative step");
    const TorusPoint d = torus_delta(from, target, world_side);
    const double dist = std::sqrt(d.x * d.x + d.y * d.y);
    if (dist <= step)
        return target;
    const double scale = step / dist;
    return wrap(from.x + d.x * scale, from.y + d.y * scale, world_side);
}

TorusPoint circular_weighted_mean(std::span<const TorusPoint> points,
                                  std::span<const double> weights,
                                  double world_side) {
    if (points.empty())
        throw std::invalid_argument("circular_weighted_mean: no points");
    if (points.size() != weights.size())
        throw std::invalid_argument("circular_weighted_mean: length mismatch");

    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0)
            throw std::invalid_argument("circular_weighted_mean: negative weight");
        total += w;
    }
    if (!(total > 0.0))
        throw std::invalid_argument("circular_weighted_mean: total weight must be > 0");

    const double to_angle = 2.0 * std::numbers::pi / world_side;

    auto mean_axis = [&](auto coord) -> double {
        double s = 0.0, c = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double theta = coord(points[i]) * to_angle;
            s += weights[i] * std::sin(theta);
            c += weights[i] * std::cos(theta);
        }
        if (std::hypot(s, c) <= 1e-12 * total) {
            // Antipodal cancellation: no direction is preferred.
            double sum = 0.0;
            for (const TorusPoint& p : points)
                sum += coord(p);
            return wrap_coord(sum / static_cast<double>(points.size()), world_side);
        }
        double angle = std::atan2(s, c);
        if (angle < 0.0)
            angle += 2.0 * std::numbers::pi;
        return wrap_coord(angle / to_angle, world_side);
    };

    return {mean_axis([](const TorusPoint& p) { return p.x; }),
            mean_axis([](const TorusPoint& p) { return p.y; })};
}

} // namespace luckgrid
