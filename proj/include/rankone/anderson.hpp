// Discrete random Schrodinger operators on finite lattice boxes and the
// Monte Carlo cyclicity experiments built on them.
//
//   H_omega = H + diag(omega),   H = truncated lattice Laplacian,
//   (H f)(x) = -sum_{|n|=1} (f(x+n) - f(x))
//
// restricted to the box (plain truncation: diagonal stays 2d everywhere).
// The potential values omega_site are drawn from one counter-based stream per
// (seed, sample_index, site), so sample i is reproducible no matter how many
// samples ran before it or on which thread.

#pragma once

#include "rankone/cyclicity.hpp"
#include "rankone/operators.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rankone {

struct LatticeBox {
    std::vector<int> sides;  // one entry per dimension

    static LatticeBox make(std::vector<int> sides, int site_cap = 4096);

    int dimension() const { return static_cast<int>(sides.size()); }
    int site_count() const;
};

struct PotentialDistribution {
    enum class Kind { Uniform, Gaussian, Bernoulli };

    Kind kind;
    double a = 0.0, b = 1.0;        // uniform on [a, b)
    double mean = 0.0, sd = 1.0;    // gaussian
    double p = 0.5;                 // bernoulli: value v1 with probability p, else v0
    double v0 = 0.0, v1 = 1.0;

    static PotentialDistribution uniform(double a, double b);
    static PotentialDistribution gaussian(double mean, double sd);
    static PotentialDistribution bernoulli(double p, double v0, double v1);

    bool absolutely_continuous() const { return kind != Kind::Bernoulli; }
    double draw(CounterRng& rng) const;
};

struct TestVectorSpec {
    enum class Kind { DeltaSite, SeededRandom, Custom };
    Kind kind = Kind::DeltaSite;
    int site = 0;  // for DeltaSite
    VecX custom;   // for Custom
};

struct AndersonConfig {
    LatticeBox box;
    PotentialDistribution distribution;
    int samples = 1;
    std::uint64_t seed = 0;
    TestVectorSpec test_vector;
};

struct MCReport {
    struct Failure {
        int sample_index;
        double min_coupling;
        double min_gap;
        bool degenerate;
    };
    int samples = 0;
    int cyclic_count = 0;
    int noncyclic_count = 0;
    int degenerate_count = 0;
    bool absolutely_continuous = false;
    std::vector<Failure> failures;  // sorted by sample index
};

HermitianOperator discrete_laplacian(const LatticeBox& box);

// Potential vector for sample i: fully determined by (seed, sample_index, site).
std::vector<double> sample_potential(const AndersonConfig& config, int sample_index);
HermitianOperator sample_hamiltonian(const AndersonConfig& config, int sample_index);

// Resolves the configured test vector at the box dimension.
VecX make_test_vector(const AndersonConfig& config);

MCReport cyclicity_mc(const AndersonConfig& config, const VecX& f,
                      const CyclicityTols& tols = {});

// Per-alpha cyclicity verdicts for H(omega0 + alpha * a). A single-site
// direction reproduces the rank-one sweep exactly (same matrices, same
// eigensolver path).
CyclicityReport affine_line_sweep(const LatticeBox& box, std::span<const double> omega0,
                                  std::span<const double> direction,
                                  std::span<const double> alpha_grid, const VecX& f,
                                  const CyclicityTols& tols = {});

}  // namespace rankone
