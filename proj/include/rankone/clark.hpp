// Clark measures of finite Blaschke products and their model realizations.
//
// For inner theta with theta(0) = 0 the Clark family {sigma_gamma} is pinned
// by the Herglotz identity
//
//   (gamma + theta(z)) / (gamma - theta(z)) = int (xi + z)/(xi - z) d sigma_gamma(xi),
//
// equivalently K_{sigma_gamma}(z) = 1 / (1 - conj(gamma) theta(z)). For a
// degree-n Blaschke product sigma_gamma is purely atomic: n atoms at the
// boundary solutions of theta(xi) = gamma with masses 1/|theta'(xi)|.
//
// The atoms are located by monotone bisection/Newton on the lifted boundary
// argument of theta, which increases by exactly 2 pi n per revolution, so all
// n roots are bracketed with no spurious candidates.

#pragma once

#include "rankone/blaschke.hpp"
#include "rankone/measure.hpp"
#include "rankone/operators.hpp"

#include <span>
#include <utility>
#include <vector>

namespace rankone {

struct ClarkFamily {
    FiniteBlaschke theta;
    std::vector<Complex> gamma_grid;

    static ClarkFamily make(FiniteBlaschke theta, std::vector<Complex> gamma_grid);
};

// Probability measure with exactly degree(theta) atoms; requires a zero of
// theta at the origin. Throws a winding-number diagnostic if the boundary
// argument fails to wrap the expected number of times.
AtomicMeasure clark_measure(const FiniteBlaschke& theta, Complex gamma);

// The rank-one perturbed shift on K_{z^n} in the monomial basis
// {1, z, ..., z^{n-1}}: the lower cyclic shift with gamma closing the cycle.
// Its eigenvalues are the atoms of clark_measure(z^n, gamma) and the squared
// first coordinates of its eigenvectors are the weights.
UnitaryOperator model_perturbation_matrix(int n, Complex gamma);

// Trigonometric polynomial sum_k c_k xi^k with k running over a contiguous
// degree window.
struct TrigPolynomial {
    int min_degree = 0;
    std::vector<Complex> coeffs;  // coefficient of xi^(min_degree + i)

    Complex evaluate(Complex xi) const;
    Complex mean() const;  // integral against normalized Lebesgue measure

    static TrigPolynomial monomial(int degree, Complex c = Complex(1.0, 0.0));
    // Interpolating polynomial through samples at the N-th roots of unity.
    static TrigPolynomial from_samples(std::span<const Complex> samples);
};

struct SpectralAverage {
    Complex lebesgue_integral;
    Complex averaged_integral;  // mean over the gamma quadrature of int f d sigma_gamma
};

// Aleksandrov spectral averaging: int f dm vs the gamma-average of the Clark
// integrals, with gamma on a uniform quadrature grid of the given size.
SpectralAverage spectral_average(const FiniteBlaschke& theta, const TrigPolynomial& f,
                                 int gamma_quadrature);
SpectralAverage spectral_average(const FiniteBlaschke& theta, std::span<const Complex> samples,
                                 int gamma_quadrature);

struct GridCheck {
    double max_residual = 0.0;
    int skipped = 0;
};

// max over the grid of |K_{sigma_gamma}(z) (1 - conj(gamma) theta(z)) - 1|;
// points within 1e-6 of the level set theta = gamma are skipped and counted.
GridCheck kernel_identity_residual(const FiniteBlaschke& theta, Complex gamma,
                                   std::span<const Complex> z_grid);

struct DouglasCheck {
    double max_f_discrepancy = 0.0;
    double max_g_discrepancy = 0.0;
    int skipped = 0;
};

// Douglas ratio: K_{f_gamma sigma_gamma} / K_{f sigma_1} should equal
// (1 - theta)/(1 - conj(gamma) theta) independently of f. The transported
// values f_gamma come from the eigenvectors of the perturbed multiplication
// operator on L^2(sigma_1), not from the identity being tested.
DouglasCheck douglas_ratio_check(const FiniteBlaschke& theta, Complex gamma,
                                 std::span<const Complex> f, std::span<const Complex> g,
                                 std::span<const Complex> z_grid);

}  // namespace rankone
