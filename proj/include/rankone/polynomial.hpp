// Self-reciprocal polynomials and level-set checks on the unit circle.
//
// A polynomial p = sum_{m<n} a_m z^m viewed inside K_{z^n} has the involution
// p~ with coefficients b_m = conj(a_{n-m}) (defined when a_0 = 0). Fixed
// points (a_0 = 0, a_m = conj(a_{n-m})) are the self-reciprocal polynomials;
// on |z| = 1 they satisfy p(z) = z^n conj(p(z)), which pins every unimodular
// solution of p = c (c != 0) to z^n = c / conj(c).

#pragma once

#include "rankone/rng.hpp"
#include "rankone/types.hpp"

#include <optional>
#include <vector>

namespace rankone {

struct ComplexPolynomial {
    std::vector<Complex> coefficients;  // a_0 ... (length <= ambient_degree)
    int ambient_degree = 1;             // the n of K_{z^n}

    static ComplexPolynomial make(std::vector<Complex> coefficients, int ambient_degree);

    Complex evaluate(Complex z) const;
    Complex coefficient(int m) const;  // 0 beyond the stored range
    int true_degree() const;           // highest nonzero index, -1 for the zero polynomial
    double max_coefficient() const;
};

struct SelfReciprocalWitness {
    bool is_self_reciprocal;
    std::vector<int> violating_indices;  // 0 flags a_0 != 0, m flags a_m != conj(a_{n-m})
};

SelfReciprocalWitness is_self_reciprocal(const ComplexPolynomial& p, double tol = 1e-12);

// The involution b_m = conj(a_{n-m}); requires a_0 = 0.
ComplexPolynomial tilde_transform(const ComplexPolynomial& p);

// q = p + p~ for p = z prod (z - beta_k); Hermitian with zeros at
// {0, beta_1, ..., beta_{n-2}}. Throws when the sum degenerates to ~0;
// callers retry with i*p via the scale argument.
ComplexPolynomial hermitian_from_roots(int n, const std::vector<Complex>& betas,
                                       Complex scale = Complex(1.0, 0.0));

// All roots of the full polynomial p - c (companion-matrix eigenvalues,
// Newton-polished) filtered to ||z| - 1| <= circle_tol and |p(z) - c| <=
// residual_tol, sorted by principal argument.
std::vector<Complex> level_set_on_circle(const ComplexPolynomial& p, Complex c,
                                         double circle_tol = 1e-8, double residual_tol = 1e-8);

struct LevelSetContainment {
    struct Root {
        Complex z;
        Complex nth_power;
        double distance;  // |z^n - e^{2i arg c}|, or max pairwise spread when c = 0
    };
    std::vector<Root> roots;
    std::optional<Complex> target;  // e^{2i arg c}; absent for the c = 0 probe
    bool contained;
};

// For self-reciprocal p and c != 0, every unimodular root of p - c must have
// z^n = e^{2i arg c}. With c = 0 there is no admissible target: the report
// lists the n-th powers of the zero set and is marked non-contained whenever
// they are not all equal (the Hermitian-element counterexample).
LevelSetContainment level_set_theorem_check(const ComplexPolynomial& p, Complex c,
                                            double tol = 1e-8);

struct HermiteAngleCheck {
    double max_angle_deviation;  // max |sin(arg p(xi) - arg(gamma)/2)| over non-vanishing atoms
    double weighted_sum_abs;     // |sum_j w_j p(xi_j)| = |int p d sigma_gamma|
    int skipped_zero_atoms;      // atoms where |p| <= 1e-10
};

// Evaluates a Hermitian element at the Clark atoms of z^n for the given
// gamma: arguments must align with arg(gamma)/2 mod pi and the atom sum must
// vanish.
HermiteAngleCheck hermite_angle_check(const ComplexPolynomial& p, Complex gamma);

// Seeded self-reciprocal polynomial in K_{z^n} with coefficients O(1).
ComplexPolynomial random_self_reciprocal(SeededRng& rng, int n);

}  // namespace rankone
