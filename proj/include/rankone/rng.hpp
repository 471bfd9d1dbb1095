// Deterministic random streams.
//
// Two flavors built on the same 64-bit mixer:
//   CounterRng — stateless counter stream keyed by (seed, stream, substream).
//                Drawing the k-th variate never depends on how many draws
//                happened elsewhere, so parallel Monte Carlo samples stay
//                reproducible.
//   SeededRng  — a sequential convenience wrapper over a single stream.
//
// All floating-point draws are derived from the raw 64-bit output with fixed
// arithmetic, so identical (seed, stream) pairs give bitwise-identical values
// on any platform with IEEE doubles.

#pragma once

#include <cstdint>
#include <cmath>
#include <complex>

namespace rankone {

// splitmix64 finalizer (Steele, Lea, Flood).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t substream = 0)
        : key_(mix64(mix64(mix64(seed) ^ stream) ^ substream)) {}

    std::uint64_t next_u64() { return mix64(key_ ^ mix64(counter_++)); }

    // Uniform in (0, 1]; never exactly 0, so it is safe under log().
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on [a, b).
    double next_uniform(double a, double b) {
        return a + (b - a) * (next_unit() - 0x1.0p-53);
    }

    // Standard normal via Box-Muller; consumes two draws.
    double next_gaussian() {
        double u1 = next_unit();
        double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    std::complex<double> next_complex_gaussian() {
        double re = next_gaussian();
        double im = next_gaussian();
        return {re, im};
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0) : rng_(seed, stream) {}

    std::uint64_t next_u64() { return rng_.next_u64(); }
    double next_unit() { return rng_.next_unit(); }
    double next_uniform(double a, double b) { return rng_.next_uniform(a, b); }
    double next_gaussian() { return rng_.next_gaussian(); }
    std::complex<double> next_complex_gaussian() { return rng_.next_complex_gaussian(); }

    // Uniform point on the unit circle.
    std::complex<double> next_unimodular() {
        double t = next_uniform(0.0, 2.0 * 3.14159265358979323846);
        return {std::cos(t), std::sin(t)};
    }

private:
    CounterRng rng_;
};

}  // namespace rankone
