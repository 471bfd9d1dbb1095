#include "rankone/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rankone {

namespace {

void require_kind(const AtomicMeasure& mu, SupportKind kind, const char* what) {
    if (mu.kind() != kind)
        throw std::invalid_argument(std::string(what) + ": measure has the wrong support kind");
}

void require_values(const AtomicMeasure& mu, std::span<const Complex> f, const char* what) {
    if (f.size() != mu.size())
        throw std::invalid_argument(std::string(what) +
                                    ": need one value per atom, in atom order");
}

}  // namespace

Complex cauchy_transform(const AtomicMeasure& mu, Complex z) {
    require_kind(mu, SupportKind::RealLine, "cauchy_transform");
    Complex s{0.0, 0.0};
    for (const Atom& a : mu.atoms()) {
        Complex d = a.location - z;
        if (std::abs(d) <= 1e-12 * std::max(1.0, std::abs(a.location)))
            throw std::domain_error("cauchy_transform: evaluation point coincides with an atom");
        s += a.weight / d;
    }
    return s;
}

Complex cauchy_transform(const AtomicMeasure& mu, std::span<const Complex> f, Complex z) {
    require_kind(mu, SupportKind::RealLine, "cauchy_transform");
    require_values(mu, f, "cauchy_transform");
    Complex s{0.0, 0.0};
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const Atom& a = mu.atoms()[k];
        Complex d = a.location - z;
        if (std::abs(d) <= 1e-12 * std::max(1.0, std::abs(a.location)))
            throw std::domain_error("cauchy_transform: evaluation point coincides with an atom");
        s += f[k] * a.weight / d;
    }
    return s;
}

Complex herglotz_transform(const AtomicMeasure& sigma, Complex z) {
    require_kind(sigma, SupportKind::UnitCircle, "herglotz_transform");
    Complex s{0.0, 0.0};
    for (const Atom& a : sigma.atoms()) {
        Complex d = a.location - z;
        if (std::abs(d) <= 1e-10)
            throw std::domain_error("herglotz_transform: evaluation point too close to an atom");
        s += a.weight * (a.location + z) / d;
    }
    return s;
}

Complex disk_cauchy(const AtomicMeasure& sigma, Complex z) {
    require_kind(sigma, SupportKind::UnitCircle, "disk_cauchy");
    Complex s{0.0, 0.0};
    for (const Atom& a : sigma.atoms()) {
        Complex d = 1.0 - std::conj(a.location) * z;
        if (std::abs(d) <= 1e-14)
            throw std::domain_error("disk_cauchy: kernel singular at evaluation point");
        s += a.weight / d;
    }
    return s;
}

Complex disk_cauchy(const AtomicMeasure& sigma, std::span<const Complex> f, Complex z) {
    require_kind(sigma, SupportKind::UnitCircle, "disk_cauchy");
    require_values(sigma, f, "disk_cauchy");
    Complex s{0.0, 0.0};
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        const Atom& a = sigma.atoms()[k];
        Complex d = 1.0 - std::conj(a.location) * z;
        if (std::abs(d) <= 1e-14)
            throw std::domain_error("disk_cauchy: kernel singular at evaluation point");
        s += f[k] * a.weight / d;
    }
    return s;
}

Complex normalized_cauchy(const AtomicMeasure& sigma, std::span<const Complex> f, Complex z) {
    Complex den = disk_cauchy(sigma, z);
    if (std::abs(den) <= 1e-12)
        throw std::domain_error("normalized_cauchy: K_sigma vanishes at evaluation point");
    return disk_cauchy(sigma, f, z) / den;
}

std::vector<double> default_boundary_ladder() {
    return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
}

Complex extrapolate_to_zero(std::span<const double> xs, std::span<const Complex> fs) {
    if (xs.size() != fs.size() || xs.empty())
        throw std::invalid_argument("extrapolate_to_zero: need matching nonempty samples");
    std::vector<Complex> p(fs.begin(), fs.end());
    const std::size_t n = xs.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = 0; i + level < n; ++i) {
            // Neville update for target x = 0.
            p[i] = (xs[i + level] * p[i] - xs[i] * p[i + 1]) / (xs[i + level] - xs[i]);
        }
    return p[0];
}

Complex radial_normalized_cauchy_limit(const AtomicMeasure& sigma, std::span<const Complex> f,
                                       Complex xi, std::span<const double> ladder) {
    std::vector<double> xs(ladder.begin(), ladder.end());
    std::vector<Complex> samples;
    samples.reserve(xs.size());
    for (double y : xs) samples.push_back(normalized_cauchy(sigma, f, (1.0 - y) * xi));
    return extrapolate_to_zero(xs, samples);
}

Complex line_normalized_cauchy_limit(const AtomicMeasure& mu, std::span<const Complex> f,
                                     double x, std::span<const double> ladder) {
    std::vector<double> xs(ladder.begin(), ladder.end());
    std::vector<Complex> samples;
    samples.reserve(xs.size());
    for (double y : xs) {
        Complex z(x, y);
        samples.push_back(cauchy_transform(mu, f, z) / cauchy_transform(mu, z));
    }
    return extrapolate_to_zero(xs, samples);
}

Complex SampledDensity::cauchy(Complex z) const {
    if (values.size() < 2) throw std::invalid_argument("SampledDensity: need at least 2 samples");
    const double h = spacing();
    Complex s{0.0, 0.0};
    // Exact integral of the piecewise-linear interpolant: on each cell,
    // int (a + b t)/(t - z) dt = b h + (a + b z) [log(t1 - z) - log(t0 - z)].
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        double t0 = lo + h * static_cast<double>(k);
        double t1 = t0 + h;
        double b = (values[k + 1] - values[k]) / h;
        double a = values[k] - b * t0;
        s += b * h + (a + b * z) * (std::log(t1 - z) - std::log(t0 - z));
    }
    return s;
}

PrivalovResult privalov_jump(const SampledDensity& density, double x,
                             std::span<const double> ladder) {
    if (ladder.empty()) throw std::invalid_argument("privalov_jump: empty ladder");
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i)
        if (!(ladder[i] > ladder[i + 1]))
            throw std::invalid_argument("privalov_jump: ladder must be strictly decreasing");
    if (!(x > density.lo && x < density.hi))
        throw std::invalid_argument("privalov_jump: x must be interior to the density support");
    if (!(density.spacing() < ladder.back()))
        throw std::invalid_argument(
            "privalov_jump: grid spacing must be below the smallest ladder value");

    std::vector<double> xs(ladder.begin(), ladder.end());
    std::vector<Complex> jumps;
    jumps.reserve(xs.size());
    for (double y : xs)
        jumps.push_back(density.cauchy(Complex(x, y)) - density.cauchy(Complex(x, -y)));

    PrivalovResult r;
    r.jump = extrapolate_to_zero(xs, jumps);
    r.density_estimate = r.jump / Complex(0.0, kTwoPi);
    return r;
}

}  // namespace rankone
