// Finite Blaschke products: inner functions given by their zeros in the open
// disk and a unimodular constant,
//
//   theta(z) = c * prod_k b_k(z),   b_0(z) = z,
//   b_a(z) = (|a|/a) (a - z)/(1 - conj(a) z)   for a != 0.
//
// On the unit circle |theta| = 1 and the lifted argument of theta(e^{it})
// increases strictly by 2 pi n over one revolution; that monotonicity is what
// the Clark-measure root finder relies on.

#pragma once

#include "rankone/rng.hpp"
#include "rankone/types.hpp"

#include <vector>

namespace rankone {

class FiniteBlaschke {
public:
    // Throws unless every zero satisfies |a| < 1 - 1e-12 and |constant| = 1.
    FiniteBlaschke(std::vector<Complex> zeros, Complex unimodular_constant = Complex(1.0, 0.0));

    // theta(z) = z^n.
    static FiniteBlaschke monomial(int n);

    const std::vector<Complex>& zeros() const { return zeros_; }
    Complex constant() const { return constant_; }
    int degree() const { return static_cast<int>(zeros_.size()); }
    bool vanishes_at_origin() const;

    Complex evaluate(Complex z) const;
    Complex derivative(Complex z) const;

    // d/dt arg theta(e^{it}) = sum of Poisson kernels over the zeros;
    // strictly positive on the circle.
    double boundary_argument_derivative(double t) const;

private:
    std::vector<Complex> zeros_;
    Complex constant_;
};

// Seeded Blaschke product of the given degree with a zero pinned at the
// origin and the rest drawn from |a| <= max_radius.
FiniteBlaschke random_blaschke(SeededRng& rng, int degree, double max_radius = 0.8);

}  // namespace rankone
