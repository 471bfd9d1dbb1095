#include "rankone/clark.hpp"

#include "rankone/cyclicity.hpp"
#include "rankone/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rankone {

namespace {

Complex circle_point(double t) { return Complex(std::cos(t), std::sin(t)); }

// Breakpoints of the lifted argument of theta(e^{it}) on [0, 2pi]. Intervals
// are split until each principal-argument increment is small enough that the
// lift is unambiguous (the boundary argument is strictly increasing).
struct ArgumentTable {
    std::vector<double> t;
    std::vector<double> lift;
};

void subdivide(const FiniteBlaschke& theta, double t0, Complex v0, double t1, Complex v1,
               ArgumentTable& table, double& lift, int depth) {
    double inc = std::arg(v1 / v0);
    if (inc > 0.0 && inc < 0.45 * kPi) {
        lift += inc;
        table.t.push_back(t1);
        table.lift.push_back(lift);
        return;
    }
    if (depth > 60)
        throw std::runtime_error("clark_measure: argument lift refinement failed to converge");
    double tm = 0.5 * (t0 + t1);
    Complex vm = theta.evaluate(circle_point(tm));
    subdivide(theta, t0, v0, tm, vm, table, lift, depth + 1);
    subdivide(theta, tm, vm, t1, v1, table, lift, depth + 1);
}

ArgumentTable build_argument_table(const FiniteBlaschke& theta) {
    const int coarse = std::max(64, 32 * theta.degree());
    ArgumentTable table;
    double lift = std::arg(theta.evaluate(Complex(1.0, 0.0)));
    table.t.push_back(0.0);
    table.lift.push_back(lift);
    Complex prev = theta.evaluate(Complex(1.0, 0.0));
    for (int i = 1; i <= coarse; ++i) {
        double t0 = kTwoPi * static_cast<double>(i - 1) / coarse;
        double t1 = kTwoPi * static_cast<double>(i) / coarse;
        Complex v1 = theta.evaluate(circle_point(t1));
        subdivide(theta, t0, prev, t1, v1, table, lift, 0);
        prev = v1;
    }
    return table;
}

// Solves lift(t) = target inside the bracketing table interval by Newton
// safeguarded with bisection. Within the bracket the defect is recovered
// exactly from the principal argument of theta(e^{it}) conj(rotation).
double solve_in_bracket(const FiniteBlaschke& theta, Complex rotation, double lo, double hi) {
    auto defect = [&](double t) { return std::arg(theta.evaluate(circle_point(t)) * rotation); };
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 100; ++iter) {
        double r = defect(t);
        if (std::abs(r) < 1e-14) return t;
        if (r > 0.0)
            hi = t;
        else
            lo = t;
        double step = r / theta.boundary_argument_derivative(t);
        double tn = t - step;
        if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
        if (std::abs(tn - t) < 1e-16) return tn;
        t = tn;
    }
    return t;
}

Complex require_unimodular(Complex gamma, const char* what) {
    if (!is_unimodular(gamma))
        throw std::invalid_argument(std::string(what) + ": gamma must be unimodular");
    return gamma;
}

}  // namespace

ClarkFamily ClarkFamily::make(FiniteBlaschke theta, std::vector<Complex> gamma_grid) {
    for (Complex g : gamma_grid) require_unimodular(g, "ClarkFamily");
    return ClarkFamily{std::move(theta), std::move(gamma_grid)};
}

AtomicMeasure clark_measure(const FiniteBlaschke& theta, Complex gamma) {
    require_unimodular(gamma, "clark_measure");
    if (!theta.vanishes_at_origin())
        throw std::invalid_argument(
            "clark_measure: theta(0) = 0 is required for the probability normalization");

    const int n = theta.degree();
    ArgumentTable table = build_argument_table(theta);

    const double total = table.lift.back() - table.lift.front();
    if (std::abs(total - kTwoPi * n) > 1e-6)
        throw std::runtime_error("clark_measure: winding number " +
                                 std::to_string(total / kTwoPi) + " does not match degree " +
                                 std::to_string(n));

    // First target argument >= lift(0) congruent to arg(gamma) mod 2pi.
    const double lift0 = table.lift.front();
    const double gamma_arg = std::arg(gamma);
    double target0 = gamma_arg + kTwoPi * std::ceil((lift0 - gamma_arg) / kTwoPi);
    if (target0 < lift0) target0 += kTwoPi;

    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double target = target0 + kTwoPi * j;
        auto it = std::upper_bound(table.lift.begin(), table.lift.end(), target);
        std::size_t hi_idx = std::min<std::size_t>(
            static_cast<std::size_t>(it - table.lift.begin()), table.lift.size() - 1);
        std::size_t lo_idx = hi_idx - 1;

        double t = solve_in_bracket(theta, std::conj(gamma), table.t[lo_idx], table.t[hi_idx]);
        Complex xi = circle_point(t);
        double weight = 1.0 / std::abs(theta.derivative(xi));
        atoms.push_back(Atom{xi, weight});
    }
    if (atoms.size() != static_cast<std::size_t>(n))
        throw std::runtime_error("clark_measure: failed to isolate all roots of theta = gamma");
    return AtomicMeasure::unit_circle(std::move(atoms));
}

UnitaryOperator model_perturbation_matrix(int n, Complex gamma) {
    if (n < 1) throw std::invalid_argument("model_perturbation_matrix: need n >= 1");
    require_unimodular(gamma, "model_perturbation_matrix");
    MatX m = MatX::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) m(k + 1, k) = 1.0;
    m(0, n - 1) = gamma;
    return UnitaryOperator::from(std::move(m));
}

Complex TrigPolynomial::evaluate(Complex xi) const {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        s += coeffs[i] * std::pow(xi, min_degree + static_cast<int>(i));
    return s;
}

Complex TrigPolynomial::mean() const {
    int i = -min_degree;
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return Complex(0.0, 0.0);
    return coeffs[static_cast<std::size_t>(i)];
}

TrigPolynomial TrigPolynomial::monomial(int degree, Complex c) {
    return TrigPolynomial{degree, {c}};
}

TrigPolynomial TrigPolynomial::from_samples(std::span<const Complex> samples) {
    const int n = static_cast<int>(samples.size());
    if (n < 1) throw std::invalid_argument("TrigPolynomial::from_samples: empty sample set");
    const int kmin = -(n - 1) / 2;
    const int kmax = n / 2;
    TrigPolynomial p;
    p.min_degree = kmin;
    p.coeffs.resize(static_cast<std::size_t>(kmax - kmin + 1));
    for (int k = kmin; k <= kmax; ++k) {
        Complex c{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
            double t = -kTwoPi * static_cast<double>(k) * static_cast<double>(j) / n;
            c += samples[static_cast<std::size_t>(j)] * Complex(std::cos(t), std::sin(t));
        }
        p.coeffs[static_cast<std::size_t>(k - kmin)] = c / static_cast<double>(n);
    }
    return p;
}

SpectralAverage spectral_average(const FiniteBlaschke& theta, const TrigPolynomial& f,
                                 int gamma_quadrature) {
    if (gamma_quadrature < 1)
        throw std::invalid_argument("spectral_average: empty gamma quadrature");

    Complex avg{0.0, 0.0};
    for (Complex gamma : uniform_circle_grid(gamma_quadrature)) {
        AtomicMeasure sigma = clark_measure(theta, gamma);
        Complex inner_integral{0.0, 0.0};
        for (const Atom& a : sigma.atoms()) inner_integral += a.weight * f.evaluate(a.location);
        avg += inner_integral;
    }
    avg /= static_cast<double>(gamma_quadrature);
    return SpectralAverage{f.mean(), avg};
}

SpectralAverage spectral_average(const FiniteBlaschke& theta, std::span<const Complex> samples,
                                 int gamma_quadrature) {
    return spectral_average(theta, TrigPolynomial::from_samples(samples), gamma_quadrature);
}

GridCheck kernel_identity_residual(const FiniteBlaschke& theta, Complex gamma,
                                   std::span<const Complex> z_grid) {
    require_unimodular(gamma, "kernel_identity_residual");
    if (!theta.vanishes_at_origin())
        throw std::invalid_argument("kernel_identity_residual: theta(0) = 0 required");
    AtomicMeasure sigma = clark_measure(theta, gamma);

    GridCheck check;
    for (Complex z : z_grid) {
        Complex den = 1.0 - std::conj(gamma) * theta.evaluate(z);
        if (std::abs(den) < 1e-6) {
            ++check.skipped;
            continue;
        }
        check.max_residual =
            std::max(check.max_residual, std::abs(disk_cauchy(sigma, z) * den - 1.0));
    }
    return check;
}

DouglasCheck douglas_ratio_check(const FiniteBlaschke& theta, Complex gamma,
                                 std::span<const Complex> f, std::span<const Complex> g,
                                 std::span<const Complex> z_grid) {
    require_unimodular(gamma, "douglas_ratio_check");
    AtomicMeasure sigma1 = clark_measure(theta, Complex(1.0, 0.0));
    const int n = static_cast<int>(sigma1.size());
    if (f.size() != sigma1.size() || g.size() != sigma1.size())
        throw std::invalid_argument(
            "douglas_ratio_check: f and g must give one value per atom of sigma_1");

    // Perturbed multiplication operator on L^2(sigma_1) in orthonormal
    // coordinates: U_gamma = D + (gamma - 1) u (D* u)^adj with D = diag(xi_j)
    // and u_j = sqrt(w_j).
    MatX d = MatX::Zero(n, n);
    VecX u(n);
    for (int j = 0; j < n; ++j) {
        d(j, j) = sigma1.atoms()[static_cast<std::size_t>(j)].location;
        u(j) = std::sqrt(sigma1.atoms()[static_cast<std::size_t>(j)].weight);
    }
    MatX model = d + (gamma - 1.0) * (u * (d.adjoint() * u).adjoint());
    SpectralDecomposition dec = decompose(UnitaryOperator::from(std::move(model)));

    // Transported values and weights on the atoms of sigma_gamma.
    VecX f_vec(n), g_vec(n);
    for (int j = 0; j < n; ++j) {
        f_vec(j) = f[static_cast<std::size_t>(j)] * u(j);
        g_vec(j) = g[static_cast<std::size_t>(j)] * u(j);
    }
    std::vector<Atom> gamma_atoms;
    std::vector<Complex> f_gamma(static_cast<std::size_t>(n)), g_gamma(static_cast<std::size_t>(n));
    gamma_atoms.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const auto v = dec.eigenvectors.col(k);
        Complex coupling = inner(u, v);
        if (std::abs(coupling) < 1e-12)
            throw std::domain_error("douglas_ratio_check: model coupling vanished");
        Complex loc = dec.eigenvalues(k) / std::abs(dec.eigenvalues(k));
        gamma_atoms.push_back(Atom{loc, std::norm(coupling)});
        f_gamma[static_cast<std::size_t>(k)] = inner(f_vec, v) / coupling;
        g_gamma[static_cast<std::size_t>(k)] = inner(g_vec, v) / coupling;
    }
    // eigenvalues are already argument-sorted, so the measure keeps the atom
    // order that f_gamma and g_gamma are indexed by
    AtomicMeasure sigma_gamma(SupportKind::UnitCircle, gamma_atoms, /*merge_tol=*/0.0);

    std::vector<Complex> f1(f.begin(), f.end()), g1(g.begin(), g.end());
    DouglasCheck check;
    for (Complex z : z_grid) {
        Complex target = (1.0 - theta.evaluate(z)) / (1.0 - std::conj(gamma) * theta.evaluate(z));
        Complex den_f = disk_cauchy(sigma1, f1, z);
        Complex den_g = disk_cauchy(sigma1, g1, z);
        if (std::abs(den_f) < 1e-6 || std::abs(den_g) < 1e-6) {
            ++check.skipped;
            continue;
        }
        Complex ratio_f = disk_cauchy(sigma_gamma, f_gamma, z) / den_f;
        Complex ratio_g = disk_cauchy(sigma_gamma, g_gamma, z) / den_g;
        check.max_f_discrepancy = std::max(check.max_f_discrepancy, std::abs(ratio_f - target));
        check.max_g_discrepancy = std::max(check.max_g_discrepancy, std::abs(ratio_g - target));
    }
    return check;
}

}  // namespace rankone
