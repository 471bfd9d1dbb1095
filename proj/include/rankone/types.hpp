// Shared aliases and small numeric helpers used across the library.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numbers>

namespace rankone {

using Complex = std::complex<double>;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Inner product with the convention (x, y) = sum_i x_i * conj(y_i),
// linear in the first argument.
inline Complex inner(const VecX& x, const VecX& y) { return y.dot(x); }

// Principal argument mapped to [0, 2*pi).
inline double arg_2pi(Complex z) {
    double a = std::arg(z);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a -= kTwoPi;
    return a;
}

inline bool is_unimodular(Complex z, double tol = 1e-12) {
    return std::abs(std::abs(z) - 1.0) <= tol;
}

}  // namespace rankone
