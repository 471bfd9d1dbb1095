// Cauchy and Herglotz transforms of atomic measures, disk-normalized Cauchy
// ratios, boundary-limit extrapolation, and the Privalov jump estimate.
//
// Conventions:
//   line   K_mu(z)  = int d mu(t) / (t - z)            (resolvent form)
//   disk   K_mu(z)  = int d mu(xi) / (1 - conj(xi) z)
//   circle H_mu(z)  = int (xi + z) / (xi - z) d mu(xi)
//
// Boundary values are taken radially along a fixed decreasing y-ladder
// {1e-1, ..., 1e-6} and extrapolated to 0 with Neville's scheme, so every
// nontangential-limit check in the suite is deterministic.

#pragma once

#include "rankone/measure.hpp"
#include "rankone/types.hpp"

#include <span>
#include <vector>

namespace rankone {

// K_mu(z) for a real-line measure; throws on z within 1e-12 of an atom.
Complex cauchy_transform(const AtomicMeasure& mu, Complex z);

// Weighted transform int f d mu / (t - z) with f given on the atoms of mu.
Complex cauchy_transform(const AtomicMeasure& mu, std::span<const Complex> f, Complex z);

// H_sigma(z) for a circle measure; throws on z within 1e-10 of an atom.
Complex herglotz_transform(const AtomicMeasure& sigma, Complex z);

// Disk Cauchy transform of a circle measure, optionally weighted by f.
Complex disk_cauchy(const AtomicMeasure& sigma, Complex z);
Complex disk_cauchy(const AtomicMeasure& sigma, std::span<const Complex> f, Complex z);

// K_{f sigma}(z) / K_sigma(z) for |z| < 1; throws when the denominator
// vanishes within 1e-12.
Complex normalized_cauchy(const AtomicMeasure& sigma, std::span<const Complex> f, Complex z);

// The deterministic boundary ladder {1e-1, ..., 1e-6}.
std::vector<double> default_boundary_ladder();

// Polynomial (Neville) extrapolation of samples (x_i, f_i) to x = 0.
Complex extrapolate_to_zero(std::span<const double> xs, std::span<const Complex> fs);

// Radial limit of the normalized Cauchy ratio at a boundary point xi:
// extrapolates K_{f sigma}(r xi)/K_sigma(r xi) along r = 1 - y over the ladder.
Complex radial_normalized_cauchy_limit(const AtomicMeasure& sigma, std::span<const Complex> f,
                                       Complex xi, std::span<const double> ladder);

// Boundary limit of K_{f mu}(x + iy)/K_mu(x + iy) on the line as y drops
// through the ladder.
Complex line_normalized_cauchy_limit(const AtomicMeasure& mu, std::span<const Complex> f,
                                     double x, std::span<const double> ladder);

// A real density sampled on a uniform grid over [lo, hi]. The Cauchy
// transform integrates the piecewise-linear interpolant exactly, so the
// quadrature error is O(h^2) uniformly in the distance to the real axis.
struct SampledDensity {
    double lo;
    double hi;
    std::vector<double> values;  // at lo + k*(hi-lo)/(n-1), n >= 2

    double spacing() const { return (hi - lo) / static_cast<double>(values.size() - 1); }
    Complex cauchy(Complex z) const;
};

struct PrivalovResult {
    Complex jump;              // extrapolated K(x + i0) - K(x - i0)
    Complex density_estimate;  // jump / (2 pi i), should approximate w(x)
};

// Estimates the boundary jump of the Cauchy transform of w(t) dt at x by
// evaluating at x +- iy down a decreasing ladder and extrapolating to y = 0.
// Requires x interior to [lo, hi], a strictly decreasing ladder, and grid
// spacing below the smallest ladder value.
PrivalovResult privalov_jump(const SampledDensity& density, double x,
                             std::span<const double> ladder);

}  // namespace rankone
