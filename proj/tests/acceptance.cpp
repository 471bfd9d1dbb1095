// Acceptance suite: one line per criterion, pinned tolerances, nonzero exit
// on any failure. Every criterion captures its quantitative output in a JSON
// body; criterion 12 reruns the full set and demands byte-identical bodies.

#include "rankone/anderson.hpp"
#include "rankone/clark.hpp"
#include "rankone/cyclicity.hpp"
#include "rankone/paley_wiener.hpp"
#include "rankone/polynomial.hpp"
#include "rankone/serialize.hpp"
#include "rankone/transforms.hpp"

#include <Eigen/LU>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace rankone;

struct Outcome {
    bool pass = true;
    std::string detail;
    Json body = Json::object();

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

Complex resolvent_lu(const MatX& a, const VecX& f, const VecX& phi, Complex z) {
    MatX shifted = a - z * MatX::Identity(a.rows(), a.cols());
    return inner(shifted.lu().solve(f), phi);
}

// ---- criterion 1: resolvent identity ---------------------------------------

Outcome criterion_resolvent() {
    Outcome out;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        SeededRng rng(1000 + static_cast<std::uint64_t>(trial));
        int dim = 2 + trial % 11;  // 2..12
        auto a = random_hermitian(rng, dim);
        VecX phi = random_vector(rng, dim);
        auto mu = spectral_measure(a, phi);

        SeededRng grid(2000 + static_cast<std::uint64_t>(trial));
        for (int j = 0; j < 100; ++j) {
            Complex z(grid.next_uniform(-4.0, 4.0),
                      (j % 2 ? -1.0 : 1.0) * grid.next_uniform(0.1, 3.0));
            worst = std::max(worst,
                             std::abs(cauchy_transform(mu, z) - resolvent_lu(a.entries, phi, phi, z)));
        }
    }
    out.body["max_residual"] = worst;
    out.require(worst < 1e-9, "max residual " + fmt(worst));
    out.detail = "max residual over 50 cases x 100 points: " + fmt(worst);
    return out;
}

// ---- criterion 2: Aronszajn-Krein ------------------------------------------

Outcome criterion_aronszajn_krein() {
    Outcome out;
    double worst_identity = 0.0, worst_ratio = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        SeededRng rng(3000 + static_cast<std::uint64_t>(trial));
        int dim = 3 + trial % 8;
        auto a = random_hermitian(rng, dim);
        VecX phi = random_unit_vector(rng, dim);
        VecX f = random_vector(rng, dim);
        double alpha = rng.next_uniform(-2.0, 2.0);
        double beta = rng.next_uniform(-2.0, 2.0);

        SeededRng gridrng(4000 + static_cast<std::uint64_t>(trial));
        std::vector<Complex> grid;
        for (int i = 0; i < 50; ++i)
            grid.emplace_back(gridrng.next_uniform(-4.0, 4.0),
                              (i % 2 ? -1.0 : 1.0) * gridrng.next_uniform(0.5, 3.0));

        auto r = aronszajn_krein_residual(a, phi, f, alpha, beta, grid,
                                          /*denominator_guard=*/1e-6);
        worst_identity = std::max(worst_identity, r.max_identity_residual);
        worst_ratio = std::max(worst_ratio, r.max_ratio_deviation);
    }

    // alpha-independence of the normalized ratio over a 20-point alpha grid
    SeededRng rng(3500);
    auto a = random_hermitian(rng, 6);
    VecX phi = random_unit_vector(rng, 6);
    VecX f = random_vector(rng, 6);
    auto d0 = decompose(a);
    SeededRng gridrng(4500);
    std::vector<Complex> zgrid;
    for (int i = 0; i < 20; ++i)
        zgrid.emplace_back(gridrng.next_uniform(-3.0, 3.0),
                           (i % 2 ? -1.0 : 1.0) * gridrng.next_uniform(0.5, 2.0));
    double alpha_dev = 0.0;
    for (double alpha : uniform_grid(-2.0, 2.0, 20)) {
        auto da = decompose(perturb_sa(a, phi, alpha));
        for (Complex z : zgrid) {
            Complex lhs = resolvent_pairing(da, f, phi, z) / resolvent_pairing(da, phi, phi, z);
            Complex rhs = resolvent_pairing(d0, f, phi, z) / resolvent_pairing(d0, phi, phi, z);
            alpha_dev = std::max(alpha_dev, std::abs(lhs - rhs));
        }
    }

    out.body["max_identity_residual"] = worst_identity;
    out.body["max_ratio_deviation"] = worst_ratio;
    out.body["alpha_grid_deviation"] = alpha_dev;
    out.require(worst_identity < 1e-9, "identity residual " + fmt(worst_identity));
    out.require(worst_ratio < 1e-9, "ratio residual " + fmt(worst_ratio));
    out.require(alpha_dev < 1e-9, "alpha-grid deviation " + fmt(alpha_dev));
    out.detail = "identity " + fmt(worst_identity) + ", alpha-independence " +
                 fmt(alpha_dev);
    return out;
}

// ---- criterion 3: finite Aronszajn-Donoghue --------------------------------

Outcome criterion_ad() {
    Outcome out;
    double worst = std::numeric_limits<double>::infinity();
    int cases = 0;
    for (int trial = 0; cases < 50 && trial < 500; ++trial) {
        SeededRng rng(5000 + static_cast<std::uint64_t>(trial));
        int dim = 2 + trial % 11;
        auto a = random_hermitian(rng, dim);
        VecX phi = random_unit_vector(rng, dim);
        if (is_cyclic(a, phi).verdict != Verdict::Cyclic) continue;  // needs full coupling
        double alpha = rng.next_uniform(-2.0, 2.0);
        double gap = rng.next_uniform(1e-3, 2.0);
        double beta = alpha + ((trial % 2) ? gap : -gap);
        worst = std::min(worst, ad_disjointness(a, phi, alpha, beta));
        ++cases;
    }
    out.body["min_cross_distance"] = worst;
    out.require(cases == 50, "only assembled " + std::to_string(cases) + " fully-coupled cases");
    out.require(worst > 1e-9, "min cross-eigenvalue distance " + fmt(worst));
    out.detail = "min cross-eigenvalue distance over 50 cases: " + fmt(worst);
    return out;
}

// ---- criterion 4: cyclicity sweep ------------------------------------------

Outcome criterion_sweep() {
    Outcome out;
    SeededRng rng(6000);
    const int dim = 8;
    auto a = random_hermitian(rng, dim);
    VecX phi = random_unit_vector(rng, dim);

    auto d = decompose(a);
    VecX f = VecX::Zero(dim);
    for (int k = 0; k < dim; ++k)
        if (k != 2) f += d.eigenvectors.col(k);  // vanishes on exactly one eigenvector

    auto grid = uniform_grid(-5.0, 5.0, 10001);
    auto family = SelfAdjointRankOneFamily::make(a, phi, grid);
    auto report = cyclicity_sweep(family, f);
    int failures = report.noncyclic_count() + report.degenerate_count();

    auto phi_report = cyclicity_sweep(family, phi);
    int phi_failures = phi_report.noncyclic_count() + phi_report.degenerate_count();

    out.body["orth_failures"] = failures;
    out.body["phi_failures"] = phi_failures;
    out.require(failures <= dim, "orth-vector failures " + std::to_string(failures));
    out.require(phi_failures == 0, "phi failures " + std::to_string(phi_failures));
    out.detail = "failures over 10001 couplings: orth-vector " + std::to_string(failures) +
                 ", phi " + std::to_string(phi_failures);
    return out;
}

// ---- criterion 5: Clark measures -------------------------------------------

Outcome criterion_clark() {
    Outcome out;
    double worst_atom = 0.0, worst_weight = 0.0;
    for (int n = 1; n <= 12; ++n) {
        auto theta = FiniteBlaschke::monomial(n);
        for (Complex gamma : uniform_circle_grid(64)) {
            auto sigma = clark_measure(theta, gamma);
            if (static_cast<int>(sigma.size()) != n) {
                out.require(false, "atom count mismatch at n = " + std::to_string(n));
                continue;
            }
            double garg = std::arg(gamma);
            for (const Atom& atom : sigma.atoms()) {
                double best = 1e18;
                for (int j = 0; j < n; ++j) {
                    Complex root = std::polar(1.0, (garg + kTwoPi * j) / n);
                    best = std::min(best, std::abs(atom.location - root));
                }
                worst_atom = std::max(worst_atom, best);
                worst_weight = std::max(worst_weight, std::abs(atom.weight - 1.0 / n));
            }
        }
    }

    double worst_herglotz = 0.0, worst_mass = 0.0;
    for (int degree = 2; degree <= 6; ++degree) {
        SeededRng rng(7000 + static_cast<std::uint64_t>(degree));
        auto theta = random_blaschke(rng, degree);
        for (int j = 0; j < 8; ++j) {
            Complex gamma = rng.next_unimodular();
            auto sigma = clark_measure(theta, gamma);
            worst_mass = std::max(worst_mass, std::abs(sigma.total_mass() - 1.0));
            SeededRng gridrng(7100 + static_cast<std::uint64_t>(degree * 16 + j));
            for (int i = 0; i < 50; ++i) {
                double r = 0.9 * std::sqrt(gridrng.next_unit());
                Complex z = std::polar(r, gridrng.next_uniform(0.0, kTwoPi));
                Complex lhs = (gamma + theta.evaluate(z)) / (gamma - theta.evaluate(z));
                worst_herglotz =
                    std::max(worst_herglotz, std::abs(herglotz_transform(sigma, z) - lhs));
            }
        }
    }

    out.body["max_atom_distance"] = worst_atom;
    out.body["max_weight_error"] = worst_weight;
    out.body["max_herglotz_residual"] = worst_herglotz;
    out.body["max_mass_error"] = worst_mass;
    out.require(worst_atom < 1e-12, "atom distance " + fmt(worst_atom));
    out.require(worst_weight < 1e-12, "weight error " + fmt(worst_weight));
    out.require(worst_herglotz < 1e-8, "herglotz residual " + fmt(worst_herglotz));
    out.require(worst_mass < 1e-8, "mass error " + fmt(worst_mass));
    out.detail = "atoms " + fmt(worst_atom) + ", weights " +
                 fmt(worst_weight) + ", herglotz " + fmt(worst_herglotz);
    return out;
}

// ---- criterion 6: model consistency ----------------------------------------

Outcome criterion_model() {
    Outcome out;
    double worst = 0.0;
    for (int n = 1; n <= 12; ++n) {
        auto theta = FiniteBlaschke::monomial(n);
        for (Complex gamma : uniform_circle_grid(64)) {
            auto d = decompose(model_perturbation_matrix(n, gamma));
            auto sigma = clark_measure(theta, gamma);
            for (int k = 0; k < n; ++k) {
                double best = 1e18;
                for (const Atom& atom : sigma.atoms())
                    best = std::min(best, std::abs(d.eigenvalues(k) - atom.location));
                worst = std::max(worst, best);
            }
        }
    }
    out.body["max_eigenvalue_atom_distance"] = worst;
    out.require(worst < 1e-10, "eigenvalue/atom distance " + fmt(worst));
    out.detail = "max eigenvalue-to-atom distance: " + fmt(worst);
    return out;
}

// ---- criterion 7: spectral averaging ---------------------------------------

Outcome criterion_averaging() {
    Outcome out;
    double worst = 0.0;
    for (int n : {1, 2, 3, 5, 8, 12}) {
        auto theta = FiniteBlaschke::monomial(n);
        for (int k = -11; k <= 11; ++k) {
            auto avg = spectral_average(theta, TrigPolynomial::monomial(k), 64);
            worst = std::max(worst, std::abs(avg.averaged_integral - avg.lebesgue_integral));
        }
    }
    // a seeded combination of degrees below 12
    SeededRng rng(7500);
    TrigPolynomial f;
    f.min_degree = -11;
    for (int i = 0; i < 23; ++i) f.coeffs.push_back(rng.next_complex_gaussian());
    auto avg = spectral_average(FiniteBlaschke::monomial(3), f, 64);
    worst = std::max(worst, std::abs(avg.averaged_integral - avg.lebesgue_integral));

    out.body["max_averaging_error"] = worst;
    out.require(worst < 1e-10, "averaging error " + fmt(worst));
    out.detail = "max |averaged - lebesgue| over monomials and a seeded combination: " +
                 fmt(worst);
    return out;
}

// ---- criterion 8: level-set theorem ----------------------------------------

Outcome criterion_level_sets() {
    Outcome out;
    double worst = 0.0;
    int nonvacuous = 0, checked = 0;
    for (int trial = 0; checked < 100 && trial < 1000; ++trial) {
        SeededRng rng(8000 + static_cast<std::uint64_t>(trial));
        int n = 3 + trial % 14;  // ambient degree 3..16, polynomial degree < 16
        auto p = random_self_reciprocal(rng, n);
        Complex c = p.evaluate(std::polar(1.0, rng.next_uniform(0.0, kTwoPi)));
        if (std::abs(c) < 0.1) continue;  // keep c safely away from 0
        ++checked;
        auto report = level_set_theorem_check(p, c);
        out.require(report.contained, "containment failed at trial " + std::to_string(trial));
        for (const auto& r : report.roots) worst = std::max(worst, r.distance);
        if (!report.roots.empty()) ++nonvacuous;
    }

    // the c = 0 Remark construction must fail containment: the CLI documents
    // it with exit code 2
    int rc = std::system(RANKONE_CLI_PATH
                         " level-sets --poly remark --n 6 --c 0 --seed 3 > /dev/null");
    int exit_code = WEXITSTATUS(rc);
    out.body["max_containment_distance"] = worst;
    out.body["nonvacuous_cases"] = nonvacuous;
    out.body["counterexample_exit_code"] = exit_code;
    out.require(checked == 100, "only assembled " + std::to_string(checked) + " level-set cases");
    out.require(worst < 1e-8, "containment distance " + fmt(worst));
    out.require(exit_code == 2,
                "counterexample exit code " + std::to_string(exit_code) + " (want 2)");
    out.detail = "100 seeded cases, max |z^n - e^{2i arg c}| = " + fmt(worst) + ", " +
                 std::to_string(nonvacuous) + " nonvacuous; c = 0 counterexample exits 2";
    return out;
}

// ---- criterion 9: Hermitian angle condition --------------------------------

Outcome criterion_hermite_angle() {
    Outcome out;
    double worst_angle = 0.0, worst_sum = 0.0;
    for (int trial = 0; trial < 12; ++trial) {
        SeededRng rng(9000 + static_cast<std::uint64_t>(trial));
        int n = 3 + trial % 10;
        ComplexPolynomial p = [&] {
            if (trial % 2 == 0) return random_self_reciprocal(rng, n);
            std::vector<Complex> betas;
            for (int k = 0; k < n - 2; ++k) betas.push_back(rng.next_unimodular());
            try {
                return hermitian_from_roots(n, betas);
            } catch (const std::domain_error&) {
                return hermitian_from_roots(n, betas, Complex(0.0, 1.0));
            }
        }();
        for (int j = 0; j < 32; ++j) {
            Complex gamma = std::polar(1.0, kTwoPi * j / 32.0 + 0.02);
            auto check = hermite_angle_check(p, gamma);
            worst_angle = std::max(worst_angle, check.max_angle_deviation);
            worst_sum = std::max(worst_sum, check.weighted_sum_abs);
        }
    }
    out.body["max_angle_deviation"] = worst_angle;
    out.body["max_weighted_sum"] = worst_sum;
    out.require(worst_angle < 1e-8, "angle deviation " + fmt(worst_angle));
    out.require(worst_sum < 1e-10, "atom sum " + fmt(worst_sum));
    out.detail = "max angle deviation " + fmt(worst_angle) + ", max |int p dsigma| " +
                 fmt(worst_sum);
    return out;
}

// ---- criterion 10: Paley-Wiener --------------------------------------------

Outcome criterion_paley_wiener() {
    Outcome out;
    double worst_recon = 0.0, worst_distance = 0.0;
    int crossings_total = 0;
    for (int trial = 0; trial < 20; ++trial) {
        SeededRng rng(10000 + static_cast<std::uint64_t>(trial));
        double a = rng.next_uniform(0.6, 1.8);
        auto f = modulate(random_band_limited(rng, a, 3, 24.0 / a, 24));
        auto [g1, g2] = pw_euler_decompose(f);
        for (std::size_t i = 0; i < f.size(); ++i)
            worst_recon = std::max(worst_recon, std::abs(g1.values[i] + Complex(0, 1) * g2.values[i] -
                                                         f.values[i]));

        for (const auto* g : {&g1, &g2}) {
            std::size_t i0 = g->size() / 3 + static_cast<std::size_t>(trial) * 5;
            Complex c = g->values[i0];
            if (std::abs(c) < 0.05) continue;
            auto report = pw_level_progression_check(*g, c);
            for (const auto& cr : report.crossings)
                if (cr.resolved) {
                    worst_distance = std::max(worst_distance, cr.distance);
                    ++crossings_total;
                }
        }
    }
    out.body["max_reconstruction_error"] = worst_recon;
    out.body["max_progression_distance"] = worst_distance;
    out.body["resolved_crossings"] = crossings_total;
    out.require(worst_recon < 1e-14, "reconstruction error " + fmt(worst_recon));
    out.require(worst_distance < 1e-6, "progression distance " + fmt(worst_distance));
    out.require(crossings_total > 20, "too few crossings detected");
    out.detail = "reconstruction " + fmt(worst_recon) + ", " +
                 std::to_string(crossings_total) + " crossings within " +
                 fmt(worst_distance) +
                 " of {arg(c)/a + pi k/a} (printed form {2 arg c + 2 pi k/a} disagrees; "
                 "containment uses the Clark atoms)";
    return out;
}

// ---- criterion 11: Anderson Monte Carlo + Privalov -------------------------

Outcome criterion_anderson() {
    Outcome out;
    AndersonConfig config;
    config.box = LatticeBox::make({30});
    config.distribution = PotentialDistribution::uniform(0.0, 1.0);
    config.samples = 200;
    config.seed = 424242;
    config.test_vector = {TestVectorSpec::Kind::DeltaSite, 0, {}};

    VecX delta = make_test_vector(config);
    auto delta_report = cyclicity_mc(config, delta);

    config.test_vector = {TestVectorSpec::Kind::SeededRandom, 0, {}};
    VecX f = make_test_vector(config);
    auto random_report = cyclicity_mc(config, f);

    SampledDensity w;
    w.lo = 0.0;
    w.hi = 1.0;
    w.values.assign(20001, 1.0);
    std::vector<double> ladder{1e-1, 1e-2, 1e-3, 1e-4};
    auto privalov = privalov_jump(w, 0.5, ladder);
    double privalov_err = std::abs(privalov.density_estimate - Complex(1.0, 0.0));

    out.body["delta_cyclic"] = delta_report.cyclic_count;
    out.body["random_cyclic"] = random_report.cyclic_count;
    out.body["privalov_error"] = privalov_err;
    out.require(delta_report.cyclic_count == 200,
                "delta_1 cyclic in " + std::to_string(delta_report.cyclic_count) + "/200");
    out.require(random_report.cyclic_count >= 198,
                "random f cyclic in " + std::to_string(random_report.cyclic_count) + "/200");
    out.require(privalov_err < 1e-3, "privalov error " + fmt(privalov_err));
    out.detail = "delta_1 " + std::to_string(delta_report.cyclic_count) + "/200, random f " +
                 std::to_string(random_report.cyclic_count) + "/200, privalov " +
                 fmt(privalov_err);
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "resolvent identity", 5.0, criterion_resolvent},
        {2, "Aronszajn-Krein residuals", 5.0, criterion_aronszajn_krein},
        {3, "finite Aronszajn-Donoghue", 5.0, criterion_ad},
        {4, "cyclicity sweep bound", 30.0, criterion_sweep},
        {5, "Clark measures", 10.0, criterion_clark},
        {6, "model/measure consistency", 5.0, criterion_model},
        {7, "Aleksandrov spectral averaging", 5.0, criterion_averaging},
        {8, "level-set theorem", 10.0, criterion_level_sets},
        {9, "Hermitian angle condition", 5.0, criterion_hermite_angle},
        {10, "Paley-Wiener Euler decomposition", 10.0, criterion_paley_wiener},
        {11, "Anderson MC + Privalov jump", 60.0, criterion_anderson},
    };

    bool all_pass = true;
    std::vector<std::string> bodies;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out = c.run();
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = out.pass && elapsed < c.budget_seconds;
        all_pass = all_pass && pass;
        bodies.push_back(out.body.dump());
        std::printf("%s — criterion %2d: %s [%s] (%.2fs, budget %.0fs)\n",
                    pass ? "PASS" : "FAIL", c.id, c.name.c_str(), out.detail.c_str(), elapsed,
                    c.budget_seconds);
        if (!out.pass) std::printf("     failure: %s\n", out.detail.c_str());
    }

    // criterion 12: byte-identical report bodies on rerun
    bool deterministic = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome again = criteria[i].run();
        if (again.body.dump() != bodies[i]) {
            deterministic = false;
            std::printf("     criterion %d body changed between runs\n", criteria[i].id);
        }
    }
    all_pass = all_pass && deterministic;
    std::printf("%s — criterion 12: determinism [report bodies of criteria 1-11 rerun byte-identical]\n",
                deterministic ? "PASS" : "FAIL");

    return all_pass ? 0 : 1;
}
