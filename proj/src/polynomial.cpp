#include "rankone/polynomial.hpp"

#include "rankone/clark.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rankone {

namespace {

// Roots of sum_k c_k z^k via the companion matrix of the monic rescaling,
// polished with a few Newton steps.
std::vector<Complex> polynomial_roots(std::vector<Complex> c) {
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1)
        throw std::domain_error("polynomial_roots: polynomial is constant");

    const int deg = static_cast<int>(c.size()) - 1;
    MatX companion = MatX::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c.back();

    Eigen::ComplexEigenSolver<MatX> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("polynomial_roots: companion eigensolver did not converge at degree " +
                                 std::to_string(deg));

    auto eval = [&](Complex z, Complex& value, Complex& deriv) {
        value = Complex(0.0, 0.0);
        deriv = Complex(0.0, 0.0);
        for (int k = deg; k >= 0; --k) {
            deriv = deriv * z + value;
            value = value * z + c[static_cast<std::size_t>(k)];
        }
    };

    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        Complex z = solver.eigenvalues()(i);
        for (int it = 0; it < 8; ++it) {
            Complex v, d;
            eval(z, v, d);
            if (std::abs(d) == 0.0) break;
            Complex step = v / d;
            z -= step;
            if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        roots.push_back(z);
    }
    return roots;
}

}  // namespace

ComplexPolynomial ComplexPolynomial::make(std::vector<Complex> coefficients, int ambient_degree) {
    if (ambient_degree < 1)
        throw std::invalid_argument("ComplexPolynomial: ambient degree must be >= 1");
    if (static_cast<int>(coefficients.size()) > ambient_degree)
        throw std::invalid_argument(
            "ComplexPolynomial: coefficient vector longer than the ambient degree");
    return ComplexPolynomial{std::move(coefficients), ambient_degree};
}

Complex ComplexPolynomial::evaluate(Complex z) const {
    Complex v{0.0, 0.0};
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * z + *it;
    return v;
}

Complex ComplexPolynomial::coefficient(int m) const {
    if (m < 0 || m >= static_cast<int>(coefficients.size())) return Complex(0.0, 0.0);
    return coefficients[static_cast<std::size_t>(m)];
}

int ComplexPolynomial::true_degree() const {
    for (int m = static_cast<int>(coefficients.size()) - 1; m >= 0; --m)
        if (std::abs(coefficients[static_cast<std::size_t>(m)]) != 0.0) return m;
    return -1;
}

double ComplexPolynomial::max_coefficient() const {
    double s = 0.0;
    for (Complex a : coefficients) s = std::max(s, std::abs(a));
    return s;
}

SelfReciprocalWitness is_self_reciprocal(const ComplexPolynomial& p, double tol) {
    SelfReciprocalWitness w;
    const int n = p.ambient_degree;
    const double scale = std::max(1.0, p.max_coefficient());
    if (std::abs(p.coefficient(0)) > tol * scale) w.violating_indices.push_back(0);
    // a_m = conj(a_{n-m}) is symmetric in m <-> n-m, so each pair is checked once.
    for (int m = 1; 2 * m <= n; ++m)
        if (std::abs(p.coefficient(m) - std::conj(p.coefficient(n - m))) > tol * scale)
            w.violating_indices.push_back(m);
    w.is_self_reciprocal = w.violating_indices.empty();
    return w;
}

ComplexPolynomial tilde_transform(const ComplexPolynomial& p) {
    if (std::abs(p.coefficient(0)) != 0.0)
        throw std::invalid_argument("tilde_transform: requires a_0 = 0 so that p~ stays in K_{z^n}");
    const int n = p.ambient_degree;
    std::vector<Complex> b(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    for (int m = 1; m <= n - 1; ++m) b[static_cast<std::size_t>(m)] = std::conj(p.coefficient(n - m));
    return ComplexPolynomial::make(std::move(b), n);
}

ComplexPolynomial hermitian_from_roots(int n, const std::vector<Complex>& betas, Complex scale) {
    if (n < 2) throw std::invalid_argument("hermitian_from_roots: need n >= 2");
    if (static_cast<int>(betas.size()) != n - 2)
        throw std::invalid_argument("hermitian_from_roots: need exactly n - 2 boundary roots");
    for (Complex b : betas)
        if (!is_unimodular(b))
            throw std::invalid_argument("hermitian_from_roots: roots must lie on the unit circle");

    // p = scale * z * prod_k (z - beta_k), degree n - 1.
    std::vector<Complex> p{Complex(0.0, 0.0), scale};
    for (Complex b : betas) {
        std::vector<Complex> next(p.size() + 1, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] += p[i];
            next[i] -= b * p[i];
        }
        p = std::move(next);
    }
    ComplexPolynomial poly = ComplexPolynomial::make(std::move(p), n);
    ComplexPolynomial tilde = tilde_transform(poly);

    std::vector<Complex> q(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    for (int m = 0; m < n; ++m)
        q[static_cast<std::size_t>(m)] = poly.coefficient(m) + tilde.coefficient(m);
    ComplexPolynomial result = ComplexPolynomial::make(std::move(q), n);
    if (result.max_coefficient() < 1e-12 * std::max(1.0, poly.max_coefficient()))
        throw std::domain_error(
            "hermitian_from_roots: p + p~ degenerated to zero; retry with a rotated scale");
    return result;
}

std::vector<Complex> level_set_on_circle(const ComplexPolynomial& p, Complex c, double circle_tol,
                                         double residual_tol) {
    std::vector<Complex> shifted = p.coefficients;
    if (shifted.empty()) shifted.push_back(Complex(0.0, 0.0));
    shifted[0] -= c;

    std::vector<Complex> on_circle;
    for (Complex z : polynomial_roots(std::move(shifted))) {
        if (std::abs(std::abs(z) - 1.0) > circle_tol) continue;
        if (std::abs(p.evaluate(z) - c) > residual_tol) continue;
        on_circle.push_back(z);
    }
    std::sort(on_circle.begin(), on_circle.end(),
              [](Complex a, Complex b) { return arg_2pi(a) < arg_2pi(b); });
    return on_circle;
}

LevelSetContainment level_set_theorem_check(const ComplexPolynomial& p, Complex c, double tol) {
    LevelSetContainment report;
    const int n = p.ambient_degree;

    std::vector<Complex> roots = level_set_on_circle(p, c);
    if (c != Complex(0.0, 0.0)) {
        double two_arg = 2.0 * std::arg(c);
        report.target = Complex(std::cos(two_arg), std::sin(two_arg));
        report.contained = true;
        for (Complex z : roots) {
            Complex zn = std::pow(z, n);
            double dist = std::abs(zn - *report.target);
            report.roots.push_back({z, zn, dist});
            if (dist > tol) report.contained = false;
        }
        return report;
    }

    // c = 0: there is no single admissible Clark parameter. Report the n-th
    // powers of the unimodular zero set; containment holds only if they all
    // coincide (the Hermitian counterexample scatters them by construction).
    report.target = std::nullopt;
    report.contained = true;
    for (Complex z : roots) {
        Complex zn = std::pow(z, n);
        double spread = 0.0;
        for (Complex w : roots) spread = std::max(spread, std::abs(zn - std::pow(w, n)));
        report.roots.push_back({z, zn, spread});
        if (spread > tol) report.contained = false;
    }
    return report;
}

HermiteAngleCheck hermite_angle_check(const ComplexPolynomial& p, Complex gamma) {
    SelfReciprocalWitness w = is_self_reciprocal(p);
    if (!w.is_self_reciprocal)
        throw std::invalid_argument("hermite_angle_check: p must be a Hermitian element (p~ = p)");
    if (!is_unimodular(gamma))
        throw std::invalid_argument("hermite_angle_check: gamma must be unimodular");

    AtomicMeasure sigma = clark_measure(FiniteBlaschke::monomial(p.ambient_degree), gamma);
    const double half_arg = 0.5 * std::arg(gamma);

    HermiteAngleCheck check{0.0, 0.0, 0};
    Complex atom_sum{0.0, 0.0};
    for (const Atom& a : sigma.atoms()) {
        Complex v = p.evaluate(a.location);
        atom_sum += a.weight * v;
        if (std::abs(v) <= 1e-10) {
            ++check.skipped_zero_atoms;
            continue;
        }
        // branch-free angle comparison mod pi
        double dev = std::abs(std::sin(std::arg(v) - half_arg));
        check.max_angle_deviation = std::max(check.max_angle_deviation, dev);
    }
    check.weighted_sum_abs = std::abs(atom_sum);
    return check;
}

ComplexPolynomial random_self_reciprocal(SeededRng& rng, int n) {
    if (n < 2) throw std::invalid_argument("random_self_reciprocal: need n >= 2");
    std::vector<Complex> a(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    for (int m = 1; 2 * m <= n; ++m) {
        Complex c = rng.next_complex_gaussian();
        if (2 * m == n) c = Complex(c.real(), 0.0);  // the middle coefficient must be real
        a[static_cast<std::size_t>(m)] = c;
        a[static_cast<std::size_t>(n - m)] = std::conj(c);
    }
    return ComplexPolynomial::make(std::move(a), n);
}

}  // namespace rankone
