// Euler-type decomposition for band-limited functions.
//
// For f of exponential type a with square-summable boundary values, the
// rotation F = e^{iax} f splits as F = g1 + i g2 with
//
//   g1 = (F + vartheta conj(F))/2,   g2 = (F - vartheta conj(F))/(2i),
//   vartheta(x) = e^{2iax},
//
// and each g_i is symmetric under g -> vartheta conj(g). Writing
// g_i = e^{iax} r_i with r_i real forces every solution of g_i(x) = c
// (c != 0) onto the arithmetic progression {arg(c)/a + pi k / a}.
//
// Functions are carried as uniform samples; level crossings are located by
// sign-change bracketing of Re(g - c) and Im(g - c) with local polynomial
// interpolation, so the detector never consults the progression it is
// checked against.

#pragma once

#include "rankone/rng.hpp"
#include "rankone/types.hpp"

#include <utility>
#include <vector>

namespace rankone {

struct SampledEntireFunction {
    double x0 = 0.0;      // first grid point
    double dx = 0.0;      // spacing; must satisfy dx < pi / (4 * bandwidth)
    double bandwidth = 0.0;
    std::vector<Complex> values;

    static SampledEntireFunction make(double x0, double dx, double bandwidth,
                                      std::vector<Complex> values);

    double x_at(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
    std::size_t size() const { return values.size(); }
};

// g1, g2 on the same grid with F = g1 + i g2 reproduced exactly.
std::pair<SampledEntireFunction, SampledEntireFunction> pw_euler_decompose(
    const SampledEntireFunction& f);

struct ProgressionSpec {
    double base;     // offset of the progression
    double spacing;  // distance between consecutive points
};

struct LevelCrossingReport {
    struct Crossing {
        double x;
        double nearest_progression_point;
        double distance;
        bool resolved;  // false when refinement stagnated; excluded from containment
    };
    std::vector<Crossing> crossings;
    ProgressionSpec clark_progression;    // {arg(c)/a, pi/a}, from the Clark atoms of e^{2iaz}
    ProgressionSpec printed_progression;  // {2 arg(c), 2 pi/a}; kept for comparison only —
                                          // disagrees with the Clark atoms in offset and spacing
    bool contained(double tol = 1e-6) const;
};

// Finds the real solutions of g(x) = c on the sampled grid and measures their
// distance to the Clark-atom progression. Requires c != 0 and an oversampled
// grid.
LevelCrossingReport pw_level_progression_check(const SampledEntireFunction& g, Complex c);

// Seeded band-limited test function: a combination of shifted sinc kernels
// sum_m c_m sin(a (x - x_m)) / (x - x_m), sampled with the given oversampling
// factor relative to the doubled band [0, 2a] carried by e^{iax} f.
SampledEntireFunction random_band_limited(SeededRng& rng, double bandwidth, int terms,
                                          double half_span, int oversample = 16);

// Pointwise multiplication by e^{iax}: maps f to the rotated representative
// that pw_euler_decompose expects.
SampledEntireFunction modulate(const SampledEntireFunction& f);

}  // namespace rankone
