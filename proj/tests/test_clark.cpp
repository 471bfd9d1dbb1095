// Blaschke evaluation, Clark measures, the perturbed-shift model on K_{z^n},
// spectral averaging, and the kernel/Douglas identities. The Herglotz
// identity (gamma + theta)/(gamma - theta) = H_{sigma_gamma} is the ground
// truth that validates the 1/|theta'| weight rule.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankone/clark.hpp"
#include "rankone/cyclicity.hpp"
#include "rankone/transforms.hpp"

using namespace rankone;

namespace {

std::vector<Complex> seeded_disk_points(std::uint64_t seed, int count, double max_radius = 0.9) {
    SeededRng rng(seed);
    std::vector<Complex> pts;
    for (int i = 0; i < count; ++i) {
        double r = max_radius * std::sqrt(rng.next_unit());
        double t = rng.next_uniform(0.0, kTwoPi);
        pts.emplace_back(r * std::cos(t), r * std::sin(t));
    }
    return pts;
}

double herglotz_identity_residual(const FiniteBlaschke& theta, Complex gamma,
                                  const AtomicMeasure& sigma, std::span<const Complex> grid) {
    double worst = 0.0;
    for (Complex z : grid) {
        Complex lhs = (gamma + theta.evaluate(z)) / (gamma - theta.evaluate(z));
        worst = std::max(worst, std::abs(herglotz_transform(sigma, z) - lhs));
    }
    return worst;
}

}  // namespace

TEST_CASE("evaluate_blaschke examples") {
    auto z1 = FiniteBlaschke::monomial(1);
    CHECK(std::abs(z1.evaluate(Complex(0.0, 0.5)) - Complex(0.0, 0.5)) < 1e-15);

    auto z2 = FiniteBlaschke::monomial(2);
    Complex w = std::polar(1.0, kPi / 4.0);
    CHECK(std::abs(z2.evaluate(w) - Complex(0.0, 1.0)) < 1e-15);

    FiniteBlaschke mixed({Complex(0.0, 0.0), Complex(0.5, 0.0)});
    CHECK(std::abs(mixed.evaluate(Complex(0.5, 0.0))) < 1e-15);
    CHECK(std::abs(mixed.evaluate(Complex(0.0, 0.0))) < 1e-15);
}

TEST_CASE("blaschke boundary modulus and zero validation") {
    SeededRng rng(5);
    auto theta = random_blaschke(rng, 4);
    for (int k = 0; k < 32; ++k) {
        Complex xi = std::polar(1.0, kTwoPi * k / 32.0);
        CHECK(std::abs(std::abs(theta.evaluate(xi)) - 1.0) < 1e-12);
    }
    for (Complex a : theta.zeros()) CHECK(std::abs(theta.evaluate(a)) < 1e-13);

    CHECK_THROWS_AS(FiniteBlaschke({Complex(1.0, 0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteBlaschke({Complex(0.0, 0.0)}, Complex(2.0, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("clark_measure: monomial atoms are n-th roots with weight 1/n") {
    for (int n : {1, 2, 3, 5, 8}) {
        auto theta = FiniteBlaschke::monomial(n);
        Complex gamma = std::polar(1.0, 0.73);
        auto sigma = clark_measure(theta, gamma);
        REQUIRE(static_cast<int>(sigma.size()) == n);
        CHECK(sigma.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
        for (const Atom& a : sigma.atoms()) {
            CHECK(std::abs(std::pow(a.location, n) - gamma) < 1e-12);
            CHECK(a.weight == doctest::Approx(1.0 / n).epsilon(1e-12));
        }
    }
}

TEST_CASE("clark_measure: degree one gives a point mass at gamma") {
    auto sigma = clark_measure(FiniteBlaschke::monomial(1), Complex(0.0, 1.0));
    REQUIRE(sigma.size() == 1);
    CHECK(std::abs(sigma.atoms()[0].location - Complex(0.0, 1.0)) < 1e-14);
    CHECK(sigma.atoms()[0].weight == doctest::Approx(1.0));
}

TEST_CASE("clark_measure: degree-two product validated by the Herglotz oracle") {
    FiniteBlaschke theta({Complex(0.0, 0.0), Complex(0.5, 0.0)});
    auto sigma = clark_measure(theta, Complex(1.0, 0.0));
    REQUIRE(sigma.size() == 2);
    CHECK(sigma.total_mass() == doctest::Approx(1.0).epsilon(1e-10));

    auto grid = seeded_disk_points(99, 200);
    CHECK(herglotz_identity_residual(theta, Complex(1.0, 0.0), sigma, grid) < 1e-10);
}

TEST_CASE("clark_measure: seeded Blaschke products pass the Herglotz identity") {
    for (int degree = 2; degree <= 6; ++degree) {
        SeededRng rng(200 + static_cast<std::uint64_t>(degree));
        auto theta = random_blaschke(rng, degree);
        Complex gamma = rng.next_unimodular();
        auto sigma = clark_measure(theta, gamma);
        REQUIRE(static_cast<int>(sigma.size()) == degree);
        CHECK(sigma.total_mass() == doctest::Approx(1.0).epsilon(1e-10));
        auto grid = seeded_disk_points(300 + static_cast<std::uint64_t>(degree), 200);
        CHECK(herglotz_identity_residual(theta, gamma, sigma, grid) < 1e-8);
    }
}

TEST_CASE("clark_measure requires a zero at the origin") {
    FiniteBlaschke off_origin({Complex(0.3, 0.0)});
    CHECK_THROWS_AS(clark_measure(off_origin, Complex(1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("herglotz transform of clark(z^2, 1) matches (1 + theta)/(1 - theta) at 1/2") {
    auto sigma = clark_measure(FiniteBlaschke::monomial(2), Complex(1.0, 0.0));
    Complex v = herglotz_transform(sigma, Complex(0.5, 0.0));
    CHECK(std::abs(v - Complex(5.0 / 3.0, 0.0)) < 1e-12);
}

TEST_CASE("normalized Cauchy radial limit recovers boundary values at atoms") {
    // sigma = clark(z^2, 1) has atoms {1, -1}; transporting f(z) = z means
    // f-values equal the atom locations, and the radial limit of
    // K_{f sigma}/K_sigma at an atom returns f there.
    auto sigma = clark_measure(FiniteBlaschke::monomial(2), Complex(1.0, 0.0));
    REQUIRE(sigma.size() == 2);
    std::vector<Complex> f;
    for (const Atom& a : sigma.atoms()) f.push_back(a.location);

    auto ladder = default_boundary_ladder();
    Complex at_minus_one =
        radial_normalized_cauchy_limit(sigma, f, Complex(-1.0, 0.0), ladder);
    CHECK(std::abs(at_minus_one - Complex(-1.0, 0.0)) < 1e-9);
    Complex at_plus_one = radial_normalized_cauchy_limit(sigma, f, Complex(1.0, 0.0), ladder);
    CHECK(std::abs(at_plus_one - Complex(1.0, 0.0)) < 1e-9);

    // seeded Blaschke product: recover a generic function on the atoms
    SeededRng rng(44);
    auto theta = random_blaschke(rng, 4);
    auto sg = clark_measure(theta, rng.next_unimodular());
    std::vector<Complex> g;
    for (std::size_t j = 0; j < sg.size(); ++j) g.push_back(rng.next_complex_gaussian());
    for (std::size_t j = 0; j < sg.size(); ++j) {
        Complex limit = radial_normalized_cauchy_limit(sg, g, sg.atoms()[j].location, ladder);
        CHECK(std::abs(limit - g[j]) < 1e-6);
    }
}

TEST_CASE("clark family: atoms at distinct gammas are pairwise disjoint") {
    SeededRng rng(17);
    auto family = ClarkFamily::make(random_blaschke(rng, 5), uniform_circle_grid(24));
    std::vector<AtomicMeasure> measures;
    for (Complex gamma : family.gamma_grid)
        measures.push_back(clark_measure(family.theta, gamma));
    double dist = 1e18;
    for (std::size_t i = 0; i < measures.size(); ++i)
        for (std::size_t j = i + 1; j < measures.size(); ++j) {
            if (std::abs(family.gamma_grid[i] - family.gamma_grid[j]) < 1e-3) continue;
            for (const Atom& a : measures[i].atoms())
                for (const Atom& b : measures[j].atoms())
                    dist = std::min(dist, std::abs(a.location - b.location));
        }
    CHECK(dist > 1e-9);
}

TEST_CASE("general unitary rank-one family reproduces the Herglotz identity") {
    // Start from an arbitrary probability measure sigma_1 on the circle (not
    // built from an inner function), form U_gamma = U_1 + (gamma - 1)
    // (., U_1^* 1) 1 on L^2(sigma_1), and define theta pointwise from the
    // gamma = 1 identity. The spectral measures of U_gamma must then satisfy
    // the same identity at every parameter.
    SeededRng rng(23);
    const int n = 5;
    std::vector<Atom> atoms;
    double mass = 0.0;
    std::vector<double> weights;
    for (int j = 0; j < n; ++j) {
        weights.push_back(0.2 + rng.next_unit());
        mass += weights.back();
    }
    for (int j = 0; j < n; ++j)
        atoms.push_back(Atom{rng.next_unimodular(), weights[static_cast<std::size_t>(j)] / mass});
    AtomicMeasure sigma1(SupportKind::UnitCircle, atoms);

    // orthonormal coordinates on L^2(sigma_1)
    MatX d = MatX::Zero(n, n);
    VecX u(n);
    for (int j = 0; j < n; ++j) {
        d(j, j) = sigma1.atoms()[static_cast<std::size_t>(j)].location;
        u(j) = std::sqrt(sigma1.atoms()[static_cast<std::size_t>(j)].weight);
    }

    auto theta_at = [&](Complex z) {
        Complex h = herglotz_transform(sigma1, z);
        return (h - 1.0) / (h + 1.0);  // inverts (1 + theta)/(1 - theta) = H
    };

    for (Complex gamma : {std::polar(1.0, 0.9), std::polar(1.0, 2.5), Complex(0.0, -1.0)}) {
        MatX m = d + (gamma - 1.0) * (u * (d.adjoint() * u).adjoint());
        auto sigma_gamma = spectral_measure(UnitaryOperator::from(m), u);
        CHECK(sigma_gamma.total_mass() == doctest::Approx(1.0).epsilon(1e-10));
        SeededRng grid(29);
        for (int i = 0; i < 50; ++i) {
            Complex z = std::polar(0.85 * std::sqrt(grid.next_unit()),
                                   grid.next_uniform(0.0, kTwoPi));
            Complex lhs = (gamma + theta_at(z)) / (gamma - theta_at(z));
            CHECK(std::abs(herglotz_transform(sigma_gamma, z) - lhs) < 1e-9);
        }
    }
}

TEST_CASE("model_perturbation_matrix examples") {
    SUBCASE("n = 1") {
        auto u = model_perturbation_matrix(1, Complex(0.0, 1.0));
        CHECK(std::abs(u.entries(0, 0) - Complex(0.0, 1.0)) < 1e-15);
    }
    SUBCASE("n = 2, gamma = 1 has eigenvalues +-1") {
        auto d = decompose(model_perturbation_matrix(2, Complex(1.0, 0.0)));
        CHECK(std::abs(d.eigenvalues(0) - Complex(1.0, 0.0)) < 1e-12);
        CHECK(std::abs(d.eigenvalues(1) - Complex(-1.0, 0.0)) < 1e-12);
    }
    SUBCASE("n = 4, gamma = i matches the Clark atoms and weights") {
        Complex gamma(0.0, 1.0);
        auto d = decompose(model_perturbation_matrix(4, gamma));
        auto sigma = clark_measure(FiniteBlaschke::monomial(4), gamma);
        REQUIRE(sigma.size() == 4);
        for (int k = 0; k < 4; ++k) {
            double best = 1e18;
            int match = -1;
            for (int j = 0; j < 4; ++j) {
                double dist = std::abs(d.eigenvalues(k) - sigma.atoms()[j].location);
                if (dist < best) {
                    best = dist;
                    match = j;
                }
            }
            CHECK(best < 1e-10);
            double first_sq = std::norm(d.eigenvectors(0, k));
            CHECK(first_sq == doctest::Approx(sigma.atoms()[match].weight).epsilon(1e-10));
        }
    }
}

TEST_CASE("spectral_average: constants are exact") {
    auto theta = FiniteBlaschke::monomial(3);
    auto avg = spectral_average(theta, TrigPolynomial::monomial(0), 32);
    CHECK(std::abs(avg.lebesgue_integral - 1.0) < 1e-12);
    CHECK(std::abs(avg.averaged_integral - 1.0) < 1e-10);
}

TEST_CASE("spectral_average: xi and xi^2 against closed forms") {
    for (int n : {2, 3, 4}) {
        auto theta = FiniteBlaschke::monomial(n);
        auto avg1 = spectral_average(theta, TrigPolynomial::monomial(1), 64);
        CHECK(std::abs(avg1.lebesgue_integral) < 1e-14);
        CHECK(std::abs(avg1.averaged_integral) < 1e-10);
    }

    // theta = z^2, f = xi^2: the inner integral equals gamma, whose average
    // over the circle vanishes.
    auto theta = FiniteBlaschke::monomial(2);
    for (Complex gamma : uniform_circle_grid(8)) {
        auto sigma = clark_measure(theta, gamma);
        Complex inner_integral{0.0, 0.0};
        for (const Atom& a : sigma.atoms())
            inner_integral += a.weight * a.location * a.location;
        CHECK(std::abs(inner_integral - gamma) < 1e-12);
    }
    auto avg2 = spectral_average(theta, TrigPolynomial::monomial(2), 64);
    CHECK(std::abs(avg2.lebesgue_integral) < 1e-14);
    CHECK(std::abs(avg2.averaged_integral) < 1e-10);
}

TEST_CASE("spectral_average: seeded trig polynomial and sampled function agree") {
    SeededRng rng(404);
    TrigPolynomial f;
    f.min_degree = -5;
    for (int k = 0; k < 11; ++k) f.coeffs.push_back(rng.next_complex_gaussian());

    auto theta = FiniteBlaschke::monomial(3);
    auto avg = spectral_average(theta, f, 64);
    CHECK(std::abs(avg.averaged_integral - avg.lebesgue_integral) < 1e-10);

    std::vector<Complex> samples;
    for (int j = 0; j < 64; ++j)
        samples.push_back(f.evaluate(std::polar(1.0, kTwoPi * j / 64.0)));
    auto avg_sampled = spectral_average(theta, samples, 64);
    CHECK(std::abs(avg_sampled.lebesgue_integral - avg.lebesgue_integral) < 1e-12);
    CHECK(std::abs(avg_sampled.averaged_integral - avg.averaged_integral) < 1e-10);
}

TEST_CASE("spectral_average rejects an empty quadrature") {
    CHECK_THROWS_AS(spectral_average(FiniteBlaschke::monomial(2), TrigPolynomial::monomial(0), 0),
                    std::invalid_argument);
}

TEST_CASE("kernel_identity_residual") {
    SUBCASE("z = 0 is exact by the probability normalization") {
        std::vector<Complex> grid{Complex(0.0, 0.0)};
        auto check = kernel_identity_residual(FiniteBlaschke::monomial(2), Complex(0.0, 1.0), grid);
        CHECK(check.max_residual < 1e-13);
    }
    SUBCASE("theta = z, gamma = 1 at z = 1/2") {
        auto sigma = clark_measure(FiniteBlaschke::monomial(1), Complex(1.0, 0.0));
        CHECK(std::abs(disk_cauchy(sigma, Complex(0.5, 0.0)) - 2.0) < 1e-13);
    }
    SUBCASE("theta = z^2, gamma = i on 100 seeded points") {
        auto grid = seeded_disk_points(555, 100);
        auto check = kernel_identity_residual(FiniteBlaschke::monomial(2), Complex(0.0, 1.0), grid);
        CHECK(check.max_residual < 1e-10);
        CHECK(check.skipped == 0);
    }
    SUBCASE("seeded Blaschke product") {
        SeededRng rng(77);
        auto theta = random_blaschke(rng, 4);
        auto grid = seeded_disk_points(556, 100);
        auto check = kernel_identity_residual(theta, rng.next_unimodular(), grid);
        CHECK(check.max_residual < 1e-9);
    }
}

TEST_CASE("douglas_ratio_check") {
    SUBCASE("gamma = 1 gives the identity ratio") {
        auto theta = FiniteBlaschke::monomial(2);
        std::vector<Complex> f{Complex(1.3, 0.2), Complex(-0.4, 1.1)};
        std::vector<Complex> g{Complex(0.7, -0.9), Complex(2.0, 0.3)};
        auto grid = seeded_disk_points(600, 25, 0.7);
        auto check = douglas_ratio_check(theta, Complex(1.0, 0.0), f, g, grid);
        CHECK(check.max_f_discrepancy < 1e-12);
        CHECK(check.max_g_discrepancy < 1e-12);
    }
    SUBCASE("f = 1 reduces to the kernel identity ratio") {
        auto theta = FiniteBlaschke::monomial(2);
        std::vector<Complex> ones{Complex(1.0, 0.0), Complex(1.0, 0.0)};
        auto grid = seeded_disk_points(601, 25, 0.7);
        auto check = douglas_ratio_check(theta, Complex(0.0, 1.0), ones, ones, grid);
        CHECK(check.max_f_discrepancy < 1e-10);
    }
    SUBCASE("theta = z^2, gamma = i, seeded f and g on 50 points") {
        SeededRng rng(88);
        auto theta = FiniteBlaschke::monomial(2);
        std::vector<Complex> f{rng.next_complex_gaussian() + Complex(2.0, 0.0),
                               rng.next_complex_gaussian() + Complex(2.0, 0.0)};
        std::vector<Complex> g{rng.next_complex_gaussian() + Complex(2.0, 0.0),
                               rng.next_complex_gaussian() + Complex(2.0, 0.0)};
        auto grid = seeded_disk_points(602, 50, 0.7);
        auto check = douglas_ratio_check(theta, Complex(0.0, 1.0), f, g, grid);
        CHECK(check.max_f_discrepancy < 1e-8);
        CHECK(check.max_g_discrepancy < 1e-8);
    }
    SUBCASE("seeded degree-4 product, seeded gamma") {
        SeededRng rng(91);
        auto theta = random_blaschke(rng, 4);
        std::vector<Complex> f, g;
        for (int i = 0; i < 4; ++i) {
            f.push_back(rng.next_complex_gaussian() + Complex(3.0, 0.0));
            g.push_back(rng.next_complex_gaussian() + Complex(3.0, 0.0));
        }
        auto grid = seeded_disk_points(603, 50, 0.6);
        auto check = douglas_ratio_check(theta, rng.next_unimodular(), f, g, grid);
        CHECK(check.max_f_discrepancy < 1e-8);
        CHECK(check.max_g_discrepancy < 1e-8);
    }
}
