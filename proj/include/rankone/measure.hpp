// Finite positive atomic measures on the real line or the unit circle.
//
// Every spectral object in the library is carried by an AtomicMeasure:
// the spectral measure of T with respect to a vector phi has atoms at the
// eigenvalues and weights |(phi, u_k)|^2, with degenerate eigenvalues merged
// so the weight is the squared norm of the eigenspace projection.

#pragma once

#include "rankone/operators.hpp"
#include "rankone/types.hpp"

#include <vector>

namespace rankone {

struct Atom {
    Complex location;  // imaginary part is exactly 0 for real-line measures
    double weight;
};

class AtomicMeasure {
public:
    // Normalizes on construction: sorts atoms canonically (ascending on the
    // line, by principal argument on the circle), merges locations closer
    // than merge_tol (weights summed, locations averaged), drops exact-zero
    // weights, and validates the support invariants.
    AtomicMeasure(SupportKind kind, std::vector<Atom> atoms, double merge_tol = 1e-10);

    static AtomicMeasure real_line(std::vector<std::pair<double, double>> location_weight,
                                   double merge_tol = 1e-10);
    static AtomicMeasure unit_circle(std::vector<Atom> atoms, double merge_tol = 1e-10);

    SupportKind kind() const { return kind_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    double total_mass() const;

private:
    SupportKind kind_;
    std::vector<Atom> atoms_;
};

AtomicMeasure spectral_measure(const SpectralDecomposition& d, const VecX& phi,
                               double merge_tol = 1e-10);
AtomicMeasure spectral_measure(const HermitianOperator& op, const VecX& phi,
                               double merge_tol = 1e-10);
AtomicMeasure spectral_measure(const UnitaryOperator& op, const VecX& phi,
                               double merge_tol = 1e-10);

}  // namespace rankone
