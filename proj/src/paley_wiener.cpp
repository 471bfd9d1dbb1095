#include "rankone/paley_wiener.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>

namespace rankone {

namespace {

constexpr int kStencil = 12;  // local interpolation points per crossing

// Neville interpolation of (xs, ys) at x.
double neville(std::span<const double> xs, std::span<const double> ys, double x) {
    std::vector<double> p(ys.begin(), ys.end());
    const std::size_t n = xs.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = 0; i + level < n; ++i)
            p[i] = ((x - xs[i + level]) * p[i] + (xs[i] - x) * p[i + 1]) / (xs[i] - xs[i + level]);
    return p[0];
}

// Interpolant of one component of (g - c) on the stencil around sample index i.
struct LocalInterpolant {
    std::vector<double> xs;
    std::vector<double> re;
    std::vector<double> im;

    LocalInterpolant(const SampledEntireFunction& g, Complex c, std::size_t i) {
        const std::size_t n = g.size();
        std::size_t lo = (i >= kStencil / 2) ? i - kStencil / 2 : 0;
        if (lo + kStencil > n) lo = n - kStencil;
        for (std::size_t k = lo; k < lo + kStencil; ++k) {
            xs.push_back(g.x_at(k));
            re.push_back((g.values[k] - c).real());
            im.push_back((g.values[k] - c).imag());
        }
    }

    double real_at(double x) const { return neville(xs, re, x); }
    double imag_at(double x) const { return neville(xs, im, x); }
};

// Bisection for a sign change of `component` on [a, b]; returns the refined
// abscissa, or nullopt if the bracket degenerates.
template <typename F>
std::optional<double> bisect(F&& component, double a, double b, double xtol) {
    double fa = component(a);
    double fb = component(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) return std::nullopt;
    for (int it = 0; it < 200 && (b - a) > xtol; ++it) {
        double m = 0.5 * (a + b);
        double fm = component(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

SampledEntireFunction SampledEntireFunction::make(double x0, double dx, double bandwidth,
                                                  std::vector<Complex> values) {
    if (!(bandwidth > 0.0))
        throw std::invalid_argument("SampledEntireFunction: bandwidth must be positive");
    if (!(dx > 0.0) || !(dx < kPi / (4.0 * bandwidth)))
        throw std::invalid_argument(
            "SampledEntireFunction: grid spacing must satisfy dx < pi/(4a)");
    if (values.size() < kStencil)
        throw std::invalid_argument("SampledEntireFunction: grid too short");
    return SampledEntireFunction{x0, dx, bandwidth, std::move(values)};
}

std::pair<SampledEntireFunction, SampledEntireFunction> pw_euler_decompose(
    const SampledEntireFunction& f) {
    const double a = f.bandwidth;
    SampledEntireFunction g1 = f;
    SampledEntireFunction g2 = f;
    for (std::size_t i = 0; i < f.size(); ++i) {
        double x = f.x_at(i);
        Complex vartheta(std::cos(2.0 * a * x), std::sin(2.0 * a * x));
        Complex reflected = vartheta * std::conj(f.values[i]);
        g1.values[i] = 0.5 * (f.values[i] + reflected);
        g2.values[i] = (f.values[i] - reflected) / Complex(0.0, 2.0);
    }
    return {std::move(g1), std::move(g2)};
}

bool LevelCrossingReport::contained(double tol) const {
    for (const Crossing& c : crossings)
        if (c.resolved && c.distance > tol) return false;
    return true;
}

LevelCrossingReport pw_level_progression_check(const SampledEntireFunction& g, Complex c) {
    if (c == Complex(0.0, 0.0))
        throw std::invalid_argument("pw_level_progression_check: c must be nonzero");

    const double a = g.bandwidth;
    LevelCrossingReport report;
    report.clark_progression = {std::arg(c) / a, kPi / a};
    report.printed_progression = {2.0 * std::arg(c), kTwoPi / a};

    // Candidate brackets: sign changes of either component of g - c. A
    // bracket holds a genuine crossing only if the other component also
    // vanishes there.
    const double scale = std::abs(c);
    const double accept_tol = 1e-8 * scale;
    const double ambiguous_tol = 1e-4 * scale;
    std::vector<double> found;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        Complex u0 = g.values[i] - c;
        Complex u1 = g.values[i + 1] - c;
        bool re_change = (u0.real() > 0.0) != (u1.real() > 0.0);
        bool im_change = (u0.imag() > 0.0) != (u1.imag() > 0.0);
        if (!re_change && !im_change) continue;

        LocalInterpolant local(g, c, i);
        double lo = g.x_at(i), hi = g.x_at(i + 1);
        const double xtol = 1e-13 * std::max(1.0, std::abs(lo));

        std::optional<double> root;
        bool resolved = false;
        double residual = std::numeric_limits<double>::infinity();
        if (re_change) {
            if (auto r = bisect([&](double x) { return local.real_at(x); }, lo, hi, xtol)) {
                root = r;
                residual = std::abs(local.imag_at(*r));
            }
        }
        if ((!root || residual > accept_tol) && im_change) {
            if (auto r = bisect([&](double x) { return local.imag_at(x); }, lo, hi, xtol)) {
                double other = std::abs(local.real_at(*r));
                if (other < residual) {
                    root = r;
                    residual = other;
                }
            }
        }
        if (!root) continue;
        if (residual <= accept_tol)
            resolved = true;
        else if (residual > ambiguous_tol)
            continue;  // the other component stays far from zero: not a crossing

        // Deduplicate crossings straddling a sample point.
        if (!found.empty() && std::abs(found.back() - *root) < 0.5 * g.dx) continue;
        found.push_back(*root);

        double k = std::round((*root - report.clark_progression.base) /
                              report.clark_progression.spacing);
        double nearest =
            report.clark_progression.base + k * report.clark_progression.spacing;
        report.crossings.push_back({*root, nearest, std::abs(*root - nearest), resolved});
    }
    return report;
}

SampledEntireFunction random_band_limited(SeededRng& rng, double bandwidth, int terms,
                                          double half_span, int oversample) {
    if (terms < 1) throw std::invalid_argument("random_band_limited: need at least one term");
    if (oversample < 8)
        throw std::invalid_argument("random_band_limited: oversampling factor must be >= 8");

    std::vector<Complex> coeffs;
    std::vector<double> shifts;
    for (int m = 0; m < terms; ++m) {
        coeffs.push_back(rng.next_complex_gaussian());
        shifts.push_back(rng.next_uniform(-0.3 * half_span, 0.3 * half_span));
    }

    // Spacing pi/(oversample * 2a): factor `oversample` below the Nyquist
    // spacing of the doubled band carried by e^{iax} f.
    const double dx = kPi / (static_cast<double>(oversample) * 2.0 * bandwidth);
    const auto count = static_cast<std::size_t>(std::ceil(2.0 * half_span / dx)) + 1;
    std::vector<Complex> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        double x = -half_span + dx * static_cast<double>(i);
        Complex s{0.0, 0.0};
        for (int m = 0; m < terms; ++m) {
            double u = x - shifts[static_cast<std::size_t>(m)];
            double sinc = (std::abs(u) < 1e-8)
                              ? bandwidth * (1.0 - bandwidth * bandwidth * u * u / 6.0)
                              : std::sin(bandwidth * u) / u;
            s += coeffs[static_cast<std::size_t>(m)] * sinc;
        }
        values[i] = s;
    }
    return SampledEntireFunction::make(-half_span, dx, bandwidth, std::move(values));
}

SampledEntireFunction modulate(const SampledEntireFunction& f) {
    SampledEntireFunction g = f;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double ax = g.bandwidth * g.x_at(i);
        g.values[i] *= Complex(std::cos(ax), std::sin(ax));
    }
    return g;
}

}  // namespace rankone
