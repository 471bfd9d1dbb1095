// Cyclicity tests for finite-dimensional normal operators, parameter sweeps
// over rank-one families, the spectral representation V_alpha, and the
// Aronszajn-Krein / Aronszajn-Donoghue numerical checks.
//
// At finite dimension a vector f is cyclic for a normal operator exactly when
// the spectrum is simple and f couples to every eigenvector. The verdict uses
// numerically meaningful proxies:
//   degenerate-spectrum  when min_gap <= gap_tol * |T|
//   cyclic               when additionally min_k |(f, u_k)| > cyc_tol * |f|
//   not-cyclic           otherwise
//
// Both witnesses (min_coupling, min_gap) are always reported.

#pragma once

#include "rankone/measure.hpp"
#include "rankone/operators.hpp"

#include <span>
#include <vector>

namespace rankone {

struct CyclicityTols {
    double cyc_tol = 1e-8;  // relative to |f|
    double gap_tol = 1e-10;  // relative to the operator scale max|lambda|
};

enum class Verdict { Cyclic, NotCyclic, DegenerateSpectrum };

struct CyclicityCheck {
    Verdict verdict;
    double min_coupling;  // min_k |(f, u_k)|
    double min_gap;       // smallest eigenvalue separation
};

struct CyclicityEntry {
    Complex parameter;  // alpha (real) or gamma (unimodular)
    Verdict verdict;
    double min_coupling;
    double min_gap;
};

struct CyclicityReport {
    SupportKind parameter_kind;  // RealLine for alpha sweeps, UnitCircle for gamma
    std::vector<CyclicityEntry> entries;

    int cyclic_count() const;
    int noncyclic_count() const;
    int degenerate_count() const;
};

CyclicityCheck is_cyclic(const SpectralDecomposition& d, const VecX& f,
                         const CyclicityTols& tols = {});
CyclicityCheck is_cyclic(const HermitianOperator& op, const VecX& f,
                         const CyclicityTols& tols = {});
CyclicityCheck is_cyclic(const UnitaryOperator& op, const VecX& f,
                         const CyclicityTols& tols = {});

struct SelfAdjointRankOneFamily {
    HermitianOperator base;
    VecX direction;                  // unit vector phi
    std::vector<double> parameters;  // coupling grid

    static SelfAdjointRankOneFamily make(HermitianOperator base, VecX direction,
                                         std::vector<double> parameters);
};

struct UnitaryRankOneFamily {
    UnitaryOperator base;
    VecX direction;                   // unit vector b
    std::vector<Complex> parameters;  // unimodular grid

    static UnitaryRankOneFamily make(UnitaryOperator base, VecX direction,
                                     std::vector<Complex> parameters);
};

// One entry per grid parameter, in grid order. The family direction must be
// cyclic for the base operator.
CyclicityReport cyclicity_sweep(const SelfAdjointRankOneFamily& family, const VecX& f,
                                const CyclicityTols& tols = {});
CyclicityReport cyclicity_sweep(const UnitaryRankOneFamily& family, const VecX& f,
                                const CyclicityTols& tols = {});

// Uniform parameter grid helpers; jitter draws a seeded offset per interior
// point to avoid accidental alignment with exceptional parameters.
std::vector<double> uniform_grid(double lo, double hi, int n);
std::vector<double> jittered_grid(double lo, double hi, int n, std::uint64_t seed);
std::vector<Complex> uniform_circle_grid(int n);

// ((T - z)^{-1} f, phi) assembled from eigendata.
Complex resolvent_pairing(const SpectralDecomposition& d, const VecX& f, const VecX& phi,
                          Complex z);

// Values of V_alpha f on the atoms of mu_alpha, with the normalization
// V_alpha phi = 1:  f_alpha(lambda_k) = (f, u_k) / (phi, u_k) over the unit
// eigenvectors of A_alpha. Requires phi cyclic for A and simple spectrum of
// A_alpha; throws a representation-ill-conditioned error when some coupling
// (phi, u_k) falls below cyc_tol.
struct SpectralRepresentation {
    AtomicMeasure measure;        // mu_alpha, atoms in ascending order
    std::vector<Complex> values;  // f_alpha at the atoms, same order
};

SpectralRepresentation spectral_representation(const HermitianOperator& a, const VecX& phi,
                                               double alpha, const VecX& f,
                                               const CyclicityTols& tols = {});

// Residuals of the Aronszajn-Krein identities on a z-grid off the real line:
//   K_{f_a mu_a} = K_{f_b mu_b} / (1 + (a - b) K_{mu_b})
//   K_{f_a mu_a} / K_{mu_a} = K_{f_0 mu_0} / K_{mu_0}
// Grid points where |1 + (a-b) K_{mu_b}| < guard are skipped and counted.
struct AkResidual {
    double max_identity_residual = 0.0;
    double max_ratio_deviation = 0.0;
    int skipped = 0;
};

AkResidual aronszajn_krein_residual(const HermitianOperator& a, const VecX& phi, const VecX& f,
                                    double alpha, double beta, std::span<const Complex> z_grid,
                                    double denominator_guard = 1e-12);

// Finite Aronszajn-Donoghue witness: the smallest distance between the
// spectra of A_alpha and A_beta. Requires phi cyclic for A (fully coupled);
// returns 0 when alpha == beta.
double ad_disjointness(const HermitianOperator& a, const VecX& phi, double alpha, double beta,
                       const CyclicityTols& tols = {});

}  // namespace rankone
