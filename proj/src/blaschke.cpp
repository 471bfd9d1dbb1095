#include "rankone/blaschke.hpp"

#include <cmath>
#include <stdexcept>

namespace rankone {

namespace {

Complex factor(Complex a, Complex z) {
    if (a == Complex(0.0, 0.0)) return z;
    return (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
}

// b_a'(z); for a != 0 this is (|a|/a)(|a|^2 - 1)/(1 - conj(a) z)^2.
Complex factor_derivative(Complex a, Complex z) {
    if (a == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
    Complex den = 1.0 - std::conj(a) * z;
    return (std::abs(a) / a) * (std::norm(a) - 1.0) / (den * den);
}

}  // namespace

FiniteBlaschke::FiniteBlaschke(std::vector<Complex> zeros, Complex unimodular_constant)
    : zeros_(std::move(zeros)), constant_(unimodular_constant) {
    if (zeros_.empty()) throw std::invalid_argument("FiniteBlaschke: need at least one zero");
    for (Complex a : zeros_)
        if (!(std::abs(a) < 1.0 - 1e-12))
            throw std::invalid_argument("FiniteBlaschke: zeros must lie strictly inside the disk");
    if (!is_unimodular(constant_))
        throw std::invalid_argument("FiniteBlaschke: constant must be unimodular");
}

FiniteBlaschke FiniteBlaschke::monomial(int n) {
    if (n < 1) throw std::invalid_argument("FiniteBlaschke::monomial: need n >= 1");
    return FiniteBlaschke(std::vector<Complex>(static_cast<std::size_t>(n), Complex(0.0, 0.0)));
}

bool FiniteBlaschke::vanishes_at_origin() const {
    for (Complex a : zeros_)
        if (std::abs(a) <= 1e-14) return true;
    return false;
}

Complex FiniteBlaschke::evaluate(Complex z) const {
    Complex p = constant_;
    for (Complex a : zeros_) p *= factor(a, z);
    return p;
}

Complex FiniteBlaschke::derivative(Complex z) const {
    // Product rule: theta' = c * sum_j b_j' prod_{k != j} b_k.
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < zeros_.size(); ++j) {
        Complex term = factor_derivative(zeros_[j], z);
        for (std::size_t k = 0; k < zeros_.size(); ++k)
            if (k != j) term *= factor(zeros_[k], z);
        sum += term;
    }
    return constant_ * sum;
}

double FiniteBlaschke::boundary_argument_derivative(double t) const {
    Complex xi(std::cos(t), std::sin(t));
    double s = 0.0;
    for (Complex a : zeros_) s += (1.0 - std::norm(a)) / std::norm(xi - a);
    return s;
}

FiniteBlaschke random_blaschke(SeededRng& rng, int degree, double max_radius) {
    if (degree < 1) throw std::invalid_argument("random_blaschke: need degree >= 1");
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(degree));
    zeros.emplace_back(0.0, 0.0);
    for (int k = 1; k < degree; ++k) {
        double r = max_radius * std::sqrt(rng.next_unit());
        double t = rng.next_uniform(0.0, kTwoPi);
        zeros.emplace_back(r * std::cos(t), r * std::sin(t));
    }
    return FiniteBlaschke(std::move(zeros), rng.next_unimodular());
}

}  // namespace rankone
