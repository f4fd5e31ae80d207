#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace luckgrid {

/// Counter-based random stream: draw k of a run is a pure function of
/// (seed, k). Sequential use behaves like an ordinary generator; parallel
/// kernels can evaluate draws at absolute indices with `uniform_at` and
/// then advance the shared counter by the number of draws they consumed,
/// so threaded and serial execution replay the exact same stream.
///
/// The mix is SplitMix64 (Steele/Lea/Flood); the stream is the sequence
/// mix(seed + (k+1)*gamma) for k = 0, 1, 2, ...
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed), counter_(0) {}

    static std::uint64_t value_at(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) at an absolute stream position.
    static double uniform_at(std::uint64_t seed, std::uint64_t index) {
        return static_cast<double>(value_at(seed, index) >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_u64() { return value_at(seed_, counter_++); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log argument.
    double uniform_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform angle in [0, 2*pi).
    double angle() { return 2.0 * std::numbers::pi * uniform(); }

    /// Normal deviate via Box-Muller (cosine branch). Always consumes
    /// exactly two draws, which keeps the stream position predictable.
    double normal(double mean, double stddev) {
        const double u1 = uniform_open();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Advance past draws consumed out-of-band (e.g. by a parallel kernel
    /// that indexed the stream directly).
    void skip(std::uint64_t n) { counter_ += n; }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

    bool operator==(const CounterRng&) const = default;

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace luckgrid
