#include "rankone/anderson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rankone {

namespace {

// Stream tags keep the test-vector draws out of the potential streams.
constexpr std::uint64_t kPotentialStream = 0x706f7465ULL;   // "pote"
constexpr std::uint64_t kTestVectorStream = 0x74657374ULL;  // "test"

}  // namespace

LatticeBox LatticeBox::make(std::vector<int> sides, int site_cap) {
    if (sides.empty()) throw std::invalid_argument("LatticeBox: need at least one dimension");
    long long total = 1;
    for (int s : sides) {
        if (s < 1) throw std::invalid_argument("LatticeBox: side lengths must be positive");
        total *= s;
        if (total > site_cap)
            throw std::invalid_argument("LatticeBox: site count exceeds the cap of " +
                                        std::to_string(site_cap));
    }
    return LatticeBox{std::move(sides)};
}

int LatticeBox::site_count() const {
    int total = 1;
    for (int s : sides) total *= s;
    return total;
}

PotentialDistribution PotentialDistribution::uniform(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("PotentialDistribution: uniform requires a < b");
    PotentialDistribution d;
    d.kind = Kind::Uniform;
    d.a = a;
    d.b = b;
    return d;
}

PotentialDistribution PotentialDistribution::gaussian(double mean, double sd) {
    if (!(sd > 0.0)) throw std::invalid_argument("PotentialDistribution: gaussian requires sd > 0");
    PotentialDistribution d;
    d.kind = Kind::Gaussian;
    d.mean = mean;
    d.sd = sd;
    return d;
}

PotentialDistribution PotentialDistribution::bernoulli(double p, double v0, double v1) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("PotentialDistribution: bernoulli requires p in [0, 1]");
    PotentialDistribution d;
    d.kind = Kind::Bernoulli;
    d.p = p;
    d.v0 = v0;
    d.v1 = v1;
    return d;
}

double PotentialDistribution::draw(CounterRng& rng) const {
    switch (kind) {
        case Kind::Uniform:
            return rng.next_uniform(a, b);
        case Kind::Gaussian:
            return mean + sd * rng.next_gaussian();
        case Kind::Bernoulli:
            return (rng.next_unit() <= p) ? v1 : v0;
    }
    throw std::logic_error("PotentialDistribution: unknown kind");
}

HermitianOperator discrete_laplacian(const LatticeBox& box) {
    const int d = box.dimension();
    const int n = box.site_count();
    MatX m = MatX::Zero(n, n);

    // Lexicographic site index: the first axis varies fastest.
    std::vector<int> stride(static_cast<std::size_t>(d), 1);
    for (int axis = 1; axis < d; ++axis)
        stride[static_cast<std::size_t>(axis)] =
            stride[static_cast<std::size_t>(axis - 1)] * box.sides[static_cast<std::size_t>(axis - 1)];

    std::vector<int> coord(static_cast<std::size_t>(d), 0);
    for (int site = 0; site < n; ++site) {
        m(site, site) = 2.0 * d;
        for (int axis = 0; axis < d; ++axis) {
            if (coord[static_cast<std::size_t>(axis)] + 1 <
                box.sides[static_cast<std::size_t>(axis)]) {
                int nb = site + stride[static_cast<std::size_t>(axis)];
                m(site, nb) = -1.0;
                m(nb, site) = -1.0;
            }
        }
        // advance the multi-index
        for (int axis = 0; axis < d; ++axis) {
            if (++coord[static_cast<std::size_t>(axis)] <
                box.sides[static_cast<std::size_t>(axis)])
                break;
            coord[static_cast<std::size_t>(axis)] = 0;
        }
    }
    return HermitianOperator{std::move(m)};
}

std::vector<double> sample_potential(const AndersonConfig& config, int sample_index) {
    const int n = config.box.site_count();
    std::vector<double> omega(static_cast<std::size_t>(n));
    for (int site = 0; site < n; ++site) {
        CounterRng rng(config.seed ^ kPotentialStream, static_cast<std::uint64_t>(sample_index),
                       static_cast<std::uint64_t>(site));
        omega[static_cast<std::size_t>(site)] = config.distribution.draw(rng);
    }
    return omega;
}

HermitianOperator sample_hamiltonian(const AndersonConfig& config, int sample_index) {
    HermitianOperator h = discrete_laplacian(config.box);
    std::vector<double> omega = sample_potential(config, sample_index);
    for (int site = 0; site < config.box.site_count(); ++site)
        h.entries(site, site) += omega[static_cast<std::size_t>(site)];
    return h;
}

VecX make_test_vector(const AndersonConfig& config) {
    const int n = config.box.site_count();
    switch (config.test_vector.kind) {
        case TestVectorSpec::Kind::DeltaSite: {
            if (config.test_vector.site < 0 || config.test_vector.site >= n)
                throw std::invalid_argument("make_test_vector: delta site outside the box");
            VecX f = VecX::Zero(n);
            f(config.test_vector.site) = 1.0;
            return f;
        }
        case TestVectorSpec::Kind::SeededRandom: {
            SeededRng rng(config.seed ^ kTestVectorStream);
            return random_vector(rng, n);
        }
        case TestVectorSpec::Kind::Custom: {
            if (config.test_vector.custom.size() != n)
                throw std::invalid_argument("make_test_vector: custom vector has the wrong size");
            return config.test_vector.custom;
        }
    }
    throw std::logic_error("make_test_vector: unknown kind");
}

MCReport cyclicity_mc(const AndersonConfig& config, const VecX& f, const CyclicityTols& tols) {
    if (config.samples < 1) throw std::invalid_argument("cyclicity_mc: need samples >= 1");
    if (f.norm() == 0.0) throw std::invalid_argument("cyclicity_mc: f must be nonzero");

    MCReport report;
    report.samples = config.samples;
    report.absolutely_continuous = config.distribution.absolutely_continuous();
    for (int i = 0; i < config.samples; ++i) {
        CyclicityCheck c = is_cyclic(sample_hamiltonian(config, i), f, tols);
        switch (c.verdict) {
            case Verdict::Cyclic:
                ++report.cyclic_count;
                break;
            case Verdict::NotCyclic:
                ++report.noncyclic_count;
                report.failures.push_back({i, c.min_coupling, c.min_gap, false});
                break;
            case Verdict::DegenerateSpectrum:
                ++report.degenerate_count;
                report.failures.push_back({i, c.min_coupling, c.min_gap, true});
                break;
        }
    }
    return report;
}

CyclicityReport affine_line_sweep(const LatticeBox& box, std::span<const double> omega0,
                                  std::span<const double> direction,
                                  std::span<const double> alpha_grid, const VecX& f,
                                  const CyclicityTols& tols) {
    const int n = box.site_count();
    if (static_cast<int>(omega0.size()) != n || static_cast<int>(direction.size()) != n)
        throw std::invalid_argument("affine_line_sweep: potential vectors must match the box");
    bool nonzero = std::any_of(direction.begin(), direction.end(),
                               [](double x) { return x != 0.0; });
    if (!nonzero) throw std::invalid_argument("affine_line_sweep: direction must be nonzero");
    if (f.norm() == 0.0) throw std::invalid_argument("affine_line_sweep: f must be nonzero");

    HermitianOperator base = discrete_laplacian(box);
    for (int site = 0; site < n; ++site)
        base.entries(site, site) += omega0[static_cast<std::size_t>(site)];

    CyclicityReport report;
    report.parameter_kind = SupportKind::RealLine;
    report.entries.reserve(alpha_grid.size());
    for (double alpha : alpha_grid) {
        HermitianOperator h = base;
        for (int site = 0; site < n; ++site)
            h.entries(site, site) += alpha * direction[static_cast<std::size_t>(site)];
        CyclicityCheck c = is_cyclic(h, f, tols);
        report.entries.push_back(
            CyclicityEntry{Complex(alpha, 0.0), c.verdict, c.min_coupling, c.min_gap});
    }
    return report;
}

}  // namespace rankone
