#include "rankone/cyclicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rankone {

namespace {

int count_verdict(const CyclicityReport& r, Verdict v) {
    return static_cast<int>(
        std::count_if(r.entries.begin(), r.entries.end(),
                      [v](const CyclicityEntry& e) { return e.verdict == v; }));
}

VecX checked_unit_direction(VecX direction) {
    if (std::abs(direction.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("rank-one family: direction must have unit norm");
    return direction;
}

void require_direction_cyclic(const CyclicityCheck& check, const char* what) {
    if (check.verdict != Verdict::Cyclic)
        throw std::invalid_argument(std::string(what) +
                                    ": family direction is not cyclic for the base operator");
}

}  // namespace

int CyclicityReport::cyclic_count() const { return count_verdict(*this, Verdict::Cyclic); }
int CyclicityReport::noncyclic_count() const { return count_verdict(*this, Verdict::NotCyclic); }
int CyclicityReport::degenerate_count() const {
    return count_verdict(*this, Verdict::DegenerateSpectrum);
}

CyclicityCheck is_cyclic(const SpectralDecomposition& d, const VecX& f,
                         const CyclicityTols& tols) {
    if (f.size() != d.dim()) throw std::invalid_argument("is_cyclic: dimension mismatch");
    double fnorm = f.norm();
    if (fnorm == 0.0) throw std::invalid_argument("is_cyclic: f must be nonzero");

    CyclicityCheck check;
    check.min_gap = d.min_gap();
    check.min_coupling = std::numeric_limits<double>::infinity();
    for (int k = 0; k < d.dim(); ++k)
        check.min_coupling = std::min(check.min_coupling,
                                      std::abs(inner(f, d.eigenvectors.col(k))));

    if (check.min_gap <= tols.gap_tol * d.operator_scale())
        check.verdict = Verdict::DegenerateSpectrum;
    else if (check.min_coupling > tols.cyc_tol * fnorm)
        check.verdict = Verdict::Cyclic;
    else
        check.verdict = Verdict::NotCyclic;
    return check;
}

CyclicityCheck is_cyclic(const HermitianOperator& op, const VecX& f, const CyclicityTols& tols) {
    return is_cyclic(decompose(op), f, tols);
}

CyclicityCheck is_cyclic(const UnitaryOperator& op, const VecX& f, const CyclicityTols& tols) {
    return is_cyclic(decompose(op), f, tols);
}

SelfAdjointRankOneFamily SelfAdjointRankOneFamily::make(HermitianOperator base, VecX direction,
                                                        std::vector<double> parameters) {
    return SelfAdjointRankOneFamily{std::move(base), checked_unit_direction(std::move(direction)),
                                    std::move(parameters)};
}

UnitaryRankOneFamily UnitaryRankOneFamily::make(UnitaryOperator base, VecX direction,
                                                std::vector<Complex> parameters) {
    for (Complex g : parameters)
        if (!is_unimodular(g))
            throw std::invalid_argument("unitary family: every grid parameter must be unimodular");
    return UnitaryRankOneFamily{std::move(base), checked_unit_direction(std::move(direction)),
                                std::move(parameters)};
}

CyclicityReport cyclicity_sweep(const SelfAdjointRankOneFamily& family, const VecX& f,
                                const CyclicityTols& tols) {
    if (f.norm() == 0.0) throw std::invalid_argument("cyclicity_sweep: f must be nonzero");
    require_direction_cyclic(is_cyclic(family.base, family.direction, tols), "cyclicity_sweep");

    CyclicityReport report;
    report.parameter_kind = SupportKind::RealLine;
    report.entries.reserve(family.parameters.size());
    for (double alpha : family.parameters) {
        CyclicityCheck c =
            is_cyclic(perturb_sa(family.base, family.direction, alpha), f, tols);
        report.entries.push_back(
            CyclicityEntry{Complex(alpha, 0.0), c.verdict, c.min_coupling, c.min_gap});
    }
    return report;
}

CyclicityReport cyclicity_sweep(const UnitaryRankOneFamily& family, const VecX& f,
                                const CyclicityTols& tols) {
    if (f.norm() == 0.0) throw std::invalid_argument("cyclicity_sweep: f must be nonzero");
    require_direction_cyclic(is_cyclic(family.base, family.direction, tols), "cyclicity_sweep");

    CyclicityReport report;
    report.parameter_kind = SupportKind::UnitCircle;
    report.entries.reserve(family.parameters.size());
    for (Complex gamma : family.parameters) {
        CyclicityCheck c =
            is_cyclic(perturb_unitary(family.base, family.direction, gamma), f, tols);
        report.entries.push_back(CyclicityEntry{gamma, c.verdict, c.min_coupling, c.min_gap});
    }
    return report;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (n < 1) throw std::invalid_argument("uniform_grid: need n >= 1");
    std::vector<double> g(static_cast<std::size_t>(n));
    if (n == 1) {
        g[0] = 0.5 * (lo + hi);
        return g;
    }
    double h = (hi - lo) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + h * static_cast<double>(i);
    return g;
}

std::vector<double> jittered_grid(double lo, double hi, int n, std::uint64_t seed) {
    std::vector<double> g = uniform_grid(lo, hi, n);
    if (n < 3) return g;
    double h = (hi - lo) / static_cast<double>(n - 1);
    SeededRng rng(seed, /*stream=*/0x6a697474u);  // "jitt"
    for (int i = 1; i + 1 < n; ++i)
        g[static_cast<std::size_t>(i)] += 0.25 * h * (2.0 * rng.next_unit() - 1.0);
    return g;
}

std::vector<Complex> uniform_circle_grid(int n) {
    if (n < 1) throw std::invalid_argument("uniform_circle_grid: need n >= 1");
    std::vector<Complex> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        g[static_cast<std::size_t>(i)] = Complex(std::cos(t), std::sin(t));
    }
    return g;
}

Complex resolvent_pairing(const SpectralDecomposition& d, const VecX& f, const VecX& phi,
                          Complex z) {
    Complex s{0.0, 0.0};
    for (int k = 0; k < d.dim(); ++k) {
        const auto u = d.eigenvectors.col(k);
        s += inner(f, u) * std::conj(inner(phi, u)) / (d.eigenvalues(k) - z);
    }
    return s;
}

SpectralRepresentation spectral_representation(const HermitianOperator& a, const VecX& phi,
                                               double alpha, const VecX& f,
                                               const CyclicityTols& tols) {
    require_direction_cyclic(is_cyclic(a, phi, tols), "spectral_representation");

    SpectralDecomposition d = decompose(perturb_sa(a, phi, alpha));
    if (d.min_gap() <= tols.gap_tol * d.operator_scale())
        throw std::domain_error("spectral_representation: spectrum of A_alpha is not simple");

    std::vector<Atom> atoms;
    std::vector<Complex> values;
    atoms.reserve(static_cast<std::size_t>(d.dim()));
    values.reserve(static_cast<std::size_t>(d.dim()));
    for (int k = 0; k < d.dim(); ++k) {
        const auto u = d.eigenvectors.col(k);
        Complex coupling = inner(phi, u);
        if (std::abs(coupling) < tols.cyc_tol)
            throw std::domain_error(
                "spectral_representation: representation ill-conditioned, |(phi, u_k)| below "
                "tolerance at eigenvalue index " +
                std::to_string(k));
        atoms.push_back(Atom{Complex(d.eigenvalues(k).real(), 0.0), std::norm(coupling)});
        values.push_back(inner(f, u) / coupling);
    }
    return SpectralRepresentation{AtomicMeasure(SupportKind::RealLine, std::move(atoms)),
                                  std::move(values)};
}

AkResidual aronszajn_krein_residual(const HermitianOperator& a, const VecX& phi, const VecX& f,
                                    double alpha, double beta, std::span<const Complex> z_grid,
                                    double denominator_guard) {
    require_direction_cyclic(is_cyclic(a, phi), "aronszajn_krein_residual");

    SpectralDecomposition d0 = decompose(a);
    SpectralDecomposition da = decompose(perturb_sa(a, phi, alpha));
    SpectralDecomposition db = decompose(perturb_sa(a, phi, beta));

    AkResidual r;
    for (Complex z : z_grid) {
        if (z.imag() == 0.0)
            throw std::invalid_argument("aronszajn_krein_residual: z grid must avoid the real line");
        Complex k_fa = resolvent_pairing(da, f, phi, z);
        Complex k_fb = resolvent_pairing(db, f, phi, z);
        Complex k_b = resolvent_pairing(db, phi, phi, z);
        Complex den = 1.0 + (alpha - beta) * k_b;
        if (std::abs(den) < denominator_guard) {
            ++r.skipped;
        } else {
            r.max_identity_residual =
                std::max(r.max_identity_residual, std::abs(k_fa - k_fb / den));
        }

        Complex k_a = resolvent_pairing(da, phi, phi, z);
        Complex k_f0 = resolvent_pairing(d0, f, phi, z);
        Complex k_0 = resolvent_pairing(d0, phi, phi, z);
        if (std::abs(k_a) < denominator_guard || std::abs(k_0) < denominator_guard) {
            ++r.skipped;
        } else {
            r.max_ratio_deviation =
                std::max(r.max_ratio_deviation, std::abs(k_fa / k_a - k_f0 / k_0));
        }
    }
    return r;
}

double ad_disjointness(const HermitianOperator& a, const VecX& phi, double alpha, double beta,
                       const CyclicityTols& tols) {
    CyclicityCheck check = is_cyclic(a, phi, tols);
    if (check.verdict != Verdict::Cyclic)
        throw std::invalid_argument(
            "ad_disjointness: phi must be cyclic for A with full coupling");
    if (alpha == beta) return 0.0;

    SpectralDecomposition da = decompose(perturb_sa(a, phi, alpha));
    SpectralDecomposition db = decompose(perturb_sa(a, phi, beta));
    double dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < da.dim(); ++i)
        for (int j = 0; j < db.dim(); ++j)
            dist = std::min(dist, std::abs(da.eigenvalues(i) - db.eigenvalues(j)));
    return dist;
}

}  // namespace rankone
