// Finite-dimensional operators and their spectral decompositions.
//
// HermitianOperator and UnitaryOperator are thin validated wrappers around
// dense complex matrices. decompose() produces eigenvalues in a canonical
// order (ascending on the line, by principal argument on the circle) with
// orthonormal, phase-normalized eigenvectors, so downstream reports are
// byte-reproducible.
//
// Rank-one perturbation families:
//   self-adjoint  A_alpha = A + alpha (., phi) phi,      alpha real
//   unitary       U_gamma = U + (gamma - 1)(., U^-1 b) b, |gamma| = 1

#pragma once

#include "rankone/types.hpp"
#include "rankone/rng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rankone {

enum class SupportKind { RealLine, UnitCircle };

struct HermitianOperator {
    MatX entries;

    // Throws if max |A - A*| exceeds tol relative to the matrix scale.
    static HermitianOperator from(MatX m, double hermiticity_tol = 1e-12);

    int dim() const { return static_cast<int>(entries.rows()); }
};

struct UnitaryOperator {
    MatX entries;

    // Throws if max |U*U - I| exceeds tol.
    static UnitaryOperator from(MatX m, double unitarity_tol = 1e-12);

    int dim() const { return static_cast<int>(entries.rows()); }
};

struct SpectralDecomposition {
    SupportKind kind;
    VecX eigenvalues;   // ascending (real) or by principal argument in [0, 2pi)
    MatX eigenvectors;  // orthonormal columns, largest component made real positive

    int dim() const { return static_cast<int>(eigenvalues.size()); }

    // Smallest eigenvalue separation: consecutive differences on the line,
    // chordal distance including the wrap-around pair on the circle.
    // +infinity when dim == 1.
    double min_gap() const;

    // max |lambda|; the operator norm of a normal matrix.
    double operator_scale() const;
};

SpectralDecomposition decompose(const HermitianOperator& op, double eig_tol = 1e-10);
SpectralDecomposition decompose(const UnitaryOperator& op, double eig_tol = 1e-10);

HermitianOperator perturb_sa(const HermitianOperator& a, const VecX& phi, double alpha);
UnitaryOperator perturb_unitary(const UnitaryOperator& u, const VecX& b, Complex gamma);

// Seeded generators for experiments and tests.
HermitianOperator random_hermitian(SeededRng& rng, int dim);
UnitaryOperator random_unitary(SeededRng& rng, int dim);
VecX random_vector(SeededRng& rng, int dim);
VecX random_unit_vector(SeededRng& rng, int dim);

}  // namespace rankone
