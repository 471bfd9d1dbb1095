// rankone-lab: seeded, reproducible spectral experiments from the command
// line. Every subcommand echoes its fully-resolved configuration into the
// report header; report bodies are byte-identical across reruns of the same
// invocation. Exit codes: 0 success, 1 input error, 2 theorem-check failure.

#include <CLI11.hpp>

#include "rankone/anderson.hpp"
#include "rankone/clark.hpp"
#include "rankone/cyclicity.hpp"
#include "rankone/paley_wiener.hpp"
#include "rankone/polynomial.hpp"
#include "rankone/serialize.hpp"
#include "rankone/transforms.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rankone;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitTheoremFailure = 2;

struct CommonOpts {
    std::uint64_t seed = 1;
    std::string output;
    std::string format = "json";
    std::vector<std::string> tol;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--seed", opts.seed, "random seed");
    sub->add_option("--output", opts.output,
                    "output path (default: stdout; relative paths resolve against "
                    "$RANKONE_LAB_OUTDIR when set)");
    sub->add_option("--format", opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", opts.tol, "tolerance override, name=value with name in {cyc, gap, merge}")
        ->expected(-1);
}

struct Tols {
    CyclicityTols cyclicity;
    double merge = 1e-10;
};

Tols parse_tols(const std::vector<std::string>& overrides) {
    Tols t;
    for (const std::string& s : overrides) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--tol", "expected name=value, got '" + s + "'");
        std::string name = s.substr(0, eq);
        double value = std::stod(s.substr(eq + 1));
        if (name == "cyc")
            t.cyclicity.cyc_tol = value;
        else if (name == "gap")
            t.cyclicity.gap_tol = value;
        else if (name == "merge")
            t.merge = value;
        else
            throw CLI::ValidationError("--tol", "unknown tolerance '" + name + "'");
    }
    return t;
}

Json tols_json(const Tols& t) {
    return Json{{"cyc", t.cyclicity.cyc_tol}, {"gap", t.cyclicity.gap_tol}, {"merge", t.merge}};
}

Complex parse_complex(const std::string& s) {
    if (s == "1") return {1.0, 0.0};
    if (s == "-1") return {-1.0, 0.0};
    if (s == "i") return {0.0, 1.0};
    if (s == "-i") return {0.0, -1.0};
    if (s.rfind("exp:", 0) == 0) {
        double t = std::stod(s.substr(4));
        return {std::cos(t), std::sin(t)};
    }
    auto comma = s.find(',');
    if (comma != std::string::npos)
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    return {std::stod(s), 0.0};
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::filesystem::path path(opts.output);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("RANKONE_LAB_OUTDIR")) path = std::filesystem::path(dir) / path;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output path " + path.string());
    out << text << '\n';
}

void emit_json(const CommonOpts& opts, const Json& envelope) {
    if (opts.format != "json")
        throw std::runtime_error("this subcommand only supports --format json");
    emit(opts, envelope.dump(2));
}

// CSV reports carry the config as a leading comment and no timestamp, so the
// whole artifact is reproducible byte for byte.
void emit_csv(const CommonOpts& opts, const Json& config, const std::string& table) {
    emit(opts, "# config: " + config.dump() + "\n" + table);
}

std::vector<Complex> seeded_offaxis_grid(std::uint64_t seed, int count, double min_imag) {
    SeededRng rng(seed, /*stream=*/0x7a67ULL);
    std::vector<Complex> grid;
    for (int i = 0; i < count; ++i)
        grid.emplace_back(rng.next_uniform(-4.0, 4.0),
                          (i % 2 ? -1.0 : 1.0) * rng.next_uniform(min_imag, 3.0));
    return grid;
}

// ---- subcommand runners ----------------------------------------------------

int run_spectral_measure(const CommonOpts& opts, int dim, double alpha) {
    Tols tols = parse_tols(opts.tol);
    SeededRng rng(opts.seed);
    auto a = random_hermitian(rng, dim);
    VecX phi = random_unit_vector(rng, dim);
    auto op = (alpha == 0.0) ? a : perturb_sa(a, phi, alpha);
    auto mu = spectral_measure(op, phi, tols.merge);

    Json config{{"subcommand", "spectral-measure"}, {"seed", opts.seed},      {"dim", dim},
                {"alpha", alpha},                   {"format", opts.format}, {"tol", tols_json(tols)}};
    Json body{{"measure", measure_json(mu)}, {"phi_norm_sq", phi.squaredNorm()}};
    emit_json(opts, run_envelope("spectral-measure", config, body));
    return kExitOk;
}

int run_sweep_alpha(const CommonOpts& opts, int dim, int grid, double alpha_min, double alpha_max,
                    const std::string& f_spec, bool jitter) {
    Tols tols = parse_tols(opts.tol);
    SeededRng rng(opts.seed);
    auto a = random_hermitian(rng, dim);
    VecX phi = random_unit_vector(rng, dim);

    VecX f;
    if (f_spec == "random") {
        f = random_vector(rng, dim);
    } else if (f_spec == "phi") {
        f = phi;
    } else if (f_spec.rfind("basis:", 0) == 0) {
        int k = std::stoi(f_spec.substr(6));
        if (k < 0 || k >= dim) throw std::runtime_error("--f basis index outside the dimension");
        f = VecX::Zero(dim);
        f(k) = 1.0;
    } else if (f_spec.rfind("orth:", 0) == 0) {
        // f coupled to every eigenvector except the k-th
        int k = std::stoi(f_spec.substr(5));
        if (k < 0 || k >= dim) throw std::runtime_error("--f orth index outside the dimension");
        auto d = decompose(a);
        f = VecX::Zero(dim);
        for (int j = 0; j < dim; ++j)
            if (j != k) f += d.eigenvectors.col(j);
    } else {
        throw std::runtime_error("--f must be random, phi, basis:<k>, or orth:<k>");
    }

    auto alphas = jitter ? jittered_grid(alpha_min, alpha_max, grid, opts.seed)
                         : uniform_grid(alpha_min, alpha_max, grid);
    auto family = SelfAdjointRankOneFamily::make(a, phi, std::move(alphas));
    auto report = cyclicity_sweep(family, f, tols.cyclicity);

    Json config{{"subcommand", "sweep-alpha"}, {"seed", opts.seed},
                {"dim", dim},                  {"grid", grid},
                {"alpha_min", alpha_min},      {"alpha_max", alpha_max},
                {"f", f_spec},                 {"jitter", jitter},
                {"format", opts.format},       {"tol", tols_json(tols)}};
    if (opts.format == "csv")
        emit_csv(opts, config, cyclicity_report_csv(report));
    else
        emit_json(opts, run_envelope("sweep-alpha", config, cyclicity_report_json(report)));
    return kExitOk;
}

int run_ak_check(const CommonOpts& opts, int dim, double alpha, double beta, int grid) {
    Tols tols = parse_tols(opts.tol);
    SeededRng rng(opts.seed);
    auto a = random_hermitian(rng, dim);
    VecX phi = random_unit_vector(rng, dim);
    VecX f = random_vector(rng, dim);
    auto z_grid = seeded_offaxis_grid(opts.seed, grid, 0.5);

    auto residual = aronszajn_krein_residual(a, phi, f, alpha, beta, z_grid);

    // alpha-independence of the normalized ratio over a 20-point coupling grid
    auto d0 = decompose(a);
    double ratio_dev = 0.0;
    for (double a20 : uniform_grid(-2.0, 2.0, 20)) {
        auto da = decompose(perturb_sa(a, phi, a20));
        for (Complex z : z_grid) {
            Complex lhs = resolvent_pairing(da, f, phi, z) / resolvent_pairing(da, phi, phi, z);
            Complex rhs = resolvent_pairing(d0, f, phi, z) / resolvent_pairing(d0, phi, phi, z);
            ratio_dev = std::max(ratio_dev, std::abs(lhs - rhs));
        }
    }

    Json config{{"subcommand", "ak-check"}, {"seed", opts.seed}, {"dim", dim},
                {"alpha", alpha},           {"beta", beta},      {"grid", grid},
                {"format", opts.format},    {"tol", tols_json(tols)}};
    Json body{{"max_identity_residual", residual.max_identity_residual},
              {"max_ratio_deviation", residual.max_ratio_deviation},
              {"skipped", residual.skipped},
              {"alpha_grid_ratio_deviation", ratio_dev}};
    emit_json(opts, run_envelope("ak-check", config, body));
    return kExitOk;
}

int run_clark(const CommonOpts& opts, const std::string& theta_kind, int n, int degree,
              const std::string& gamma_str) {
    Tols tols = parse_tols(opts.tol);
    Complex gamma = parse_complex(gamma_str);

    SeededRng rng(opts.seed);
    FiniteBlaschke theta = (theta_kind == "zn") ? FiniteBlaschke::monomial(n)
                                                : random_blaschke(rng, degree);
    auto sigma = clark_measure(theta, gamma);

    // Herglotz identity residual on a seeded interior grid
    SeededRng gridrng(opts.seed, /*stream=*/0x4844ULL);
    double herglotz_residual = 0.0;
    for (int i = 0; i < 200; ++i) {
        double r = 0.9 * std::sqrt(gridrng.next_unit());
        double t = gridrng.next_uniform(0.0, kTwoPi);
        Complex z = std::polar(r, t);
        Complex lhs = (gamma + theta.evaluate(z)) / (gamma - theta.evaluate(z));
        herglotz_residual = std::max(herglotz_residual,
                                     std::abs(herglotz_transform(sigma, z) - lhs));
    }

    Json config{{"subcommand", "clark"},   {"seed", opts.seed},
                {"theta", theta_kind},     {"n", n},
                {"degree", degree},        {"gamma", gamma_str},
                {"format", opts.format},   {"tol", tols_json(tols)}};
    Json body{{"theta", blaschke_json(theta)},
              {"gamma", complex_json(gamma)},
              {"measure", measure_json(sigma)},
              {"herglotz_residual", herglotz_residual}};
    emit_json(opts, run_envelope("clark", config, body));
    return kExitOk;
}

int run_average(const CommonOpts& opts, int n, int degree, int gquad) {
    auto avg = spectral_average(FiniteBlaschke::monomial(n), TrigPolynomial::monomial(degree),
                                gquad);
    Json config{{"subcommand", "average"}, {"seed", opts.seed},    {"n", n},
                {"degree", degree},        {"gquad", gquad},       {"format", opts.format}};
    Json body{{"lebesgue_integral", complex_json(avg.lebesgue_integral)},
              {"averaged_integral", complex_json(avg.averaged_integral)},
              {"difference", std::abs(avg.averaged_integral - avg.lebesgue_integral)}};
    emit_json(opts, run_envelope("average", config, body));
    return kExitOk;
}

int run_level_sets(const CommonOpts& opts, int n, const std::string& c_str,
                   const std::string& poly_kind, const std::string& coeffs_str) {
    Complex c = parse_complex(c_str);
    SeededRng rng(opts.seed);

    ComplexPolynomial p = [&] {
        if (poly_kind == "seeded") return random_self_reciprocal(rng, n);
        if (poly_kind == "remark") {
            std::vector<Complex> betas;
            for (int k = 0; k < n - 2; ++k) betas.push_back(rng.next_unimodular());
            try {
                return hermitian_from_roots(n, betas);
            } catch (const std::domain_error&) {
                return hermitian_from_roots(n, betas, Complex(0.0, 1.0));
            }
        }
        if (poly_kind == "coeffs") {
            std::vector<Complex> coeffs;
            std::stringstream ss(coeffs_str);
            std::string item;
            while (std::getline(ss, item, ';')) coeffs.push_back(parse_complex(item));
            return ComplexPolynomial::make(std::move(coeffs), n);
        }
        throw std::runtime_error("--poly must be seeded, remark, or coeffs");
    }();

    auto report = level_set_theorem_check(p, c);

    Json coeffs = Json::array();
    for (Complex a : p.coefficients) coeffs.push_back(complex_json(a));
    Json config{{"subcommand", "level-sets"}, {"seed", opts.seed},      {"n", n},
                {"c", c_str},                 {"poly", poly_kind},      {"coeffs", coeffs_str},
                {"format", opts.format}};
    Json body{{"polynomial", std::move(coeffs)},
              {"c", complex_json(c)},
              {"containment", level_set_json(report)}};
    emit_json(opts, run_envelope("level-sets", config, body));
    return report.contained ? kExitOk : kExitTheoremFailure;
}

int run_pw_euler(const CommonOpts& opts, double bandwidth, int terms, double span, int oversample,
                 double c_at) {
    SeededRng rng(opts.seed);
    auto f = modulate(random_band_limited(rng, bandwidth, terms, span, oversample));
    auto [g1, g2] = pw_euler_decompose(f);

    double reconstruction = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        reconstruction = std::max(
            reconstruction, std::abs(g1.values[i] + Complex(0, 1) * g2.values[i] - f.values[i]));

    // pick c = g1(x) at the sample nearest the requested abscissa
    auto index_near = [&](double x) {
        double t = (x - g1.x0) / g1.dx;
        auto i = static_cast<long>(std::llround(t));
        return static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(g1.size()) - 1));
    };
    std::size_t i0 = index_near(c_at);
    Complex c = g1.values[i0];
    if (std::abs(c) < 1e-6)
        throw std::runtime_error("g1 nearly vanishes at --c-at; choose another abscissa");

    auto report = pw_level_progression_check(g1, c);

    Json crossings = Json::array();
    for (const auto& cr : report.crossings)
        crossings.push_back(Json{{"x", cr.x},
                                 {"nearest_progression_point", cr.nearest_progression_point},
                                 {"distance", cr.distance},
                                 {"resolved", cr.resolved}});
    Json config{{"subcommand", "pw-euler"}, {"seed", opts.seed},
                {"bandwidth", bandwidth},   {"terms", terms},
                {"span", span},             {"oversample", oversample},
                {"c_at", c_at},             {"format", opts.format}};
    Json body{
        {"reconstruction_error", reconstruction},
        {"c", complex_json(c)},
        {"crossings", std::move(crossings)},
        {"clark_progression",
         Json{{"base", report.clark_progression.base}, {"spacing", report.clark_progression.spacing}}},
        {"printed_progression", Json{{"base", report.printed_progression.base},
                                     {"spacing", report.printed_progression.spacing}}},
        {"progression_note",
         "containment is checked against the Clark-atom progression {arg(c)/a + pi k/a}; the "
         "printed form {2 arg c + 2 pi k/a} disagrees in offset and spacing"},
        {"contained", report.contained(1e-6)}};
    emit_json(opts, run_envelope("pw-euler", config, body));
    return report.contained(1e-6) ? kExitOk : kExitTheoremFailure;
}

PotentialDistribution parse_distribution(const std::string& s) {
    auto colon = s.find(':');
    std::string kind = s.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::stringstream ss(s.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) args.push_back(std::stod(item));
    }
    if (kind == "uniform" && args.size() == 2) return PotentialDistribution::uniform(args[0], args[1]);
    if (kind == "gaussian" && args.size() == 2)
        return PotentialDistribution::gaussian(args[0], args[1]);
    if (kind == "bernoulli" && args.size() == 3)
        return PotentialDistribution::bernoulli(args[0], args[1], args[2]);
    throw std::runtime_error("--dist must be uniform:a,b, gaussian:mean,sd, or bernoulli:p,v0,v1");
}

Json distribution_json(const PotentialDistribution& d) {
    switch (d.kind) {
        case PotentialDistribution::Kind::Uniform:
            return Json{{"kind", "uniform"}, {"a", d.a}, {"b", d.b}};
        case PotentialDistribution::Kind::Gaussian:
            return Json{{"kind", "gaussian"}, {"mean", d.mean}, {"sd", d.sd}};
        case PotentialDistribution::Kind::Bernoulli:
            return Json{{"kind", "bernoulli"}, {"p", d.p}, {"v0", d.v0}, {"v1", d.v1}};
    }
    return {};
}

TestVectorSpec parse_test_vector(const std::string& s) {
    if (s == "random") return {TestVectorSpec::Kind::SeededRandom, 0, {}};
    if (s.rfind("delta:", 0) == 0)
        return {TestVectorSpec::Kind::DeltaSite, std::stoi(s.substr(6)), {}};
    throw std::runtime_error("--test-vector must be delta:<site> or random");
}

// JSON config files for anderson-mc; unknown keys are rejected.
AndersonConfig anderson_config_from_json(const Json& j) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "box" && key != "distribution" && key != "samples" && key != "seed" &&
            key != "test_vector")
            throw std::runtime_error("config: unknown key '" + key + "'");
    }
    AndersonConfig c;
    const Json& box = j.at("box");
    for (const auto& [key, value] : box.items()) {
        (void)value;
        if (key != "sides") throw std::runtime_error("config.box: unknown key '" + key + "'");
    }
    c.box = LatticeBox::make(box.at("sides").get<std::vector<int>>());

    const Json& dist = j.at("distribution");
    std::string kind = dist.at("kind").get<std::string>();
    for (const auto& [key, value] : dist.items()) {
        (void)value;
        if (key != "kind" && key != "a" && key != "b" && key != "mean" && key != "sd" &&
            key != "p" && key != "v0" && key != "v1")
            throw std::runtime_error("config.distribution: unknown key '" + key + "'");
    }
    if (kind == "uniform")
        c.distribution = PotentialDistribution::uniform(dist.at("a"), dist.at("b"));
    else if (kind == "gaussian")
        c.distribution = PotentialDistribution::gaussian(dist.at("mean"), dist.at("sd"));
    else if (kind == "bernoulli")
        c.distribution =
            PotentialDistribution::bernoulli(dist.at("p"), dist.at("v0"), dist.at("v1"));
    else
        throw std::runtime_error("config.distribution.kind: unknown kind '" + kind + "'");

    c.samples = j.at("samples").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();

    const Json& tv = j.at("test_vector");
    for (const auto& [key, value] : tv.items()) {
        (void)value;
        if (key != "kind" && key != "site")
            throw std::runtime_error("config.test_vector: unknown key '" + key + "'");
    }
    std::string tv_kind = tv.at("kind").get<std::string>();
    if (tv_kind == "delta")
        c.test_vector = {TestVectorSpec::Kind::DeltaSite, tv.value("site", 0), {}};
    else if (tv_kind == "random")
        c.test_vector = {TestVectorSpec::Kind::SeededRandom, 0, {}};
    else
        throw std::runtime_error("config.test_vector.kind: unknown kind '" + tv_kind + "'");
    return c;
}

int run_anderson_mc(const CommonOpts& opts, const std::string& config_path,
                    const std::string& sides_str, const std::string& dist_str, int samples,
                    const std::string& tv_str) {
    Tols tols = parse_tols(opts.tol);
    AndersonConfig config;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot open config file " + config_path);
        Json j = Json::parse(in);
        config = anderson_config_from_json(j);
    } else {
        std::vector<int> sides;
        std::stringstream ss(sides_str);
        std::string item;
        while (std::getline(ss, item, ',')) sides.push_back(std::stoi(item));
        config.box = LatticeBox::make(std::move(sides));
        config.distribution = parse_distribution(dist_str);
        config.samples = samples;
        config.seed = opts.seed;
        config.test_vector = parse_test_vector(tv_str);
    }

    VecX f = make_test_vector(config);
    auto report = cyclicity_mc(config, f, tols.cyclicity);

    Json sides = Json::array();
    for (int s : config.box.sides) sides.push_back(s);
    Json tv{{"kind", config.test_vector.kind == TestVectorSpec::Kind::DeltaSite ? "delta" : "random"},
            {"site", config.test_vector.site}};
    Json resolved{{"subcommand", "anderson-mc"},
                  {"box", Json{{"sides", std::move(sides)}}},
                  {"distribution", distribution_json(config.distribution)},
                  {"samples", config.samples},
                  {"seed", config.seed},
                  {"test_vector", std::move(tv)},
                  {"format", opts.format},
                  {"tol", tols_json(tols)}};
    // one-line summary to stdout regardless of the output destination
    std::cout << "anderson-mc: " << report.cyclic_count << "/" << report.samples << " cyclic, "
              << report.noncyclic_count << " non-cyclic, " << report.degenerate_count
              << " degenerate (" << (report.absolutely_continuous ? "a.c." : "discrete")
              << " potential)\n";
    emit_json(opts, run_envelope("anderson-mc", resolved, mc_report_json(report)));
    return kExitOk;
}

int run_affine_sweep(const CommonOpts& opts, const std::string& sides_str,
                     const std::string& omega0_spec, const std::string& direction_spec, int grid,
                     double alpha_min, double alpha_max, const std::string& f_spec) {
    Tols tols = parse_tols(opts.tol);
    std::vector<int> sides;
    {
        std::stringstream ss(sides_str);
        std::string item;
        while (std::getline(ss, item, ',')) sides.push_back(std::stoi(item));
    }
    auto box = LatticeBox::make(std::move(sides));
    const int n = box.site_count();
    SeededRng rng(opts.seed);

    std::vector<double> omega0(static_cast<std::size_t>(n), 0.0);
    if (omega0_spec == "random")
        for (double& w : omega0) w = rng.next_uniform(0.0, 1.0);
    else if (omega0_spec != "zero")
        throw std::runtime_error("--omega0 must be zero or random");

    std::vector<double> direction(static_cast<std::size_t>(n), 0.0);
    if (direction_spec == "ones")
        std::fill(direction.begin(), direction.end(), 1.0);
    else if (direction_spec.rfind("site:", 0) == 0) {
        int site = std::stoi(direction_spec.substr(5));
        if (site < 0 || site >= n) throw std::runtime_error("--direction site outside the box");
        direction[static_cast<std::size_t>(site)] = 1.0;
    } else {
        throw std::runtime_error("--direction must be ones or site:<k>");
    }

    VecX f;
    if (f_spec == "random")
        f = random_vector(rng, n);
    else if (f_spec.rfind("delta:", 0) == 0) {
        int site = std::stoi(f_spec.substr(6));
        if (site < 0 || site >= n) throw std::runtime_error("--f delta site outside the box");
        f = VecX::Zero(n);
        f(site) = 1.0;
    } else {
        throw std::runtime_error("--f must be random or delta:<site>");
    }

    auto report = affine_line_sweep(box, omega0, direction, uniform_grid(alpha_min, alpha_max, grid),
                                    f, tols.cyclicity);

    Json config{{"subcommand", "affine-sweep"}, {"seed", opts.seed},
                {"sides", sides_str},           {"omega0", omega0_spec},
                {"direction", direction_spec},  {"grid", grid},
                {"alpha_min", alpha_min},       {"alpha_max", alpha_max},
                {"f", f_spec},                  {"format", opts.format},
                {"tol", tols_json(tols)}};
    if (opts.format == "csv")
        emit_csv(opts, config, cyclicity_report_csv(report));
    else
        emit_json(opts, run_envelope("affine-sweep", config, cyclicity_report_json(report)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-one perturbation lab: spectral measures, Clark theory, cyclicity sweeps"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* sm = app.add_subcommand("spectral-measure", "spectral measure of a seeded operator");
    int sm_dim = 6;
    double sm_alpha = 0.0;
    add_common(sm, opts);
    sm->add_option("--dim", sm_dim, "matrix dimension")->check(CLI::PositiveNumber);
    sm->add_option("--alpha", sm_alpha, "rank-one coupling applied before measuring");

    auto* sw = app.add_subcommand("sweep-alpha", "cyclicity sweep over a coupling grid");
    int sw_dim = 8, sw_grid = 1001;
    double sw_min = -5.0, sw_max = 5.0;
    std::string sw_f = "random";
    bool sw_jitter = false;
    add_common(sw, opts);
    sw->add_option("--dim", sw_dim)->check(CLI::PositiveNumber);
    sw->add_option("--grid", sw_grid, "number of grid points")->check(CLI::PositiveNumber);
    sw->add_option("--alpha-min", sw_min);
    sw->add_option("--alpha-max", sw_max);
    sw->add_option("--f", sw_f, "test vector: random, phi, basis:<k>, or orth:<k>");
    sw->add_flag("--jitter", sw_jitter, "seeded jitter on interior grid points");

    auto* ak = app.add_subcommand("ak-check", "Aronszajn-Krein identity residuals");
    int ak_dim = 6, ak_grid = 100;
    double ak_alpha = 1.0, ak_beta = -2.0;
    add_common(ak, opts);
    ak->add_option("--dim", ak_dim)->check(CLI::PositiveNumber);
    ak->add_option("--alpha", ak_alpha);
    ak->add_option("--beta", ak_beta);
    ak->add_option("--grid", ak_grid, "off-axis z-grid size")->check(CLI::PositiveNumber);

    auto* ck = app.add_subcommand("clark", "Clark measure of an inner function");
    std::string ck_theta = "zn", ck_gamma = "1";
    int ck_n = 4, ck_degree = 3;
    add_common(ck, opts);
    ck->add_option("--theta", ck_theta, "zn or seeded")->check(CLI::IsMember({"zn", "seeded"}));
    ck->add_option("--n", ck_n, "degree of theta = z^n")->check(CLI::PositiveNumber);
    ck->add_option("--degree", ck_degree, "degree of the seeded Blaschke product")
        ->check(CLI::PositiveNumber);
    ck->add_option("--gamma", ck_gamma, "unimodular parameter (1, -1, i, -i, exp:<t>, or re,im)");

    auto* av = app.add_subcommand("average", "Aleksandrov spectral averaging for theta = z^n");
    int av_n = 3, av_degree = 1, av_gquad = 64;
    add_common(av, opts);
    av->add_option("--n", av_n)->check(CLI::PositiveNumber);
    av->add_option("--degree", av_degree, "monomial degree of f = xi^k");
    av->add_option("--gquad", av_gquad, "gamma quadrature size")->check(CLI::PositiveNumber);

    auto* ls = app.add_subcommand("level-sets", "unimodular level sets of a polynomial in K_{z^n}");
    int ls_n = 8;
    std::string ls_c = "1", ls_poly = "seeded", ls_coeffs;
    add_common(ls, opts);
    ls->add_option("--n", ls_n, "ambient degree")->check(CLI::PositiveNumber);
    ls->add_option("--c", ls_c, "level value (0 probes the Hermitian counterexample)");
    ls->add_option("--poly", ls_poly, "seeded, remark, or coeffs");
    ls->add_option("--coeffs", ls_coeffs, "a_0;a_1;... as re,im entries (with --poly coeffs)");

    auto* pw = app.add_subcommand("pw-euler", "Euler decomposition of a band-limited function");
    double pw_bandwidth = 1.0, pw_span = 30.0, pw_c_at = -8.0;
    int pw_terms = 4, pw_oversample = 24;
    add_common(pw, opts);
    pw->add_option("--bandwidth", pw_bandwidth)->check(CLI::PositiveNumber);
    pw->add_option("--terms", pw_terms)->check(CLI::PositiveNumber);
    pw->add_option("--span", pw_span, "half-width of the sampling window")
        ->check(CLI::PositiveNumber);
    pw->add_option("--oversample", pw_oversample)->check(CLI::PositiveNumber);
    pw->add_option("--c-at", pw_c_at, "abscissa whose g1 value becomes the level c");

    auto* am = app.add_subcommand("anderson-mc", "Monte Carlo cyclicity for Anderson Hamiltonians");
    std::string am_config, am_sides = "30", am_dist = "uniform:0,1", am_tv = "delta:0";
    int am_samples = 200;
    add_common(am, opts);
    am->add_option("--config", am_config, "JSON config file (overrides the flags below)");
    am->add_option("--sides", am_sides, "box side lengths, comma separated");
    am->add_option("--dist", am_dist, "uniform:a,b | gaussian:mean,sd | bernoulli:p,v0,v1");
    am->add_option("--samples", am_samples)->check(CLI::PositiveNumber);
    am->add_option("--test-vector", am_tv, "delta:<site> or random");

    auto* af = app.add_subcommand("affine-sweep", "cyclicity along an affine potential line");
    std::string af_sides = "10", af_omega0 = "random", af_direction = "ones", af_f = "delta:0";
    int af_grid = 101;
    double af_min = -3.0, af_max = 3.0;
    add_common(af, opts);
    af->add_option("--sides", af_sides);
    af->add_option("--omega0", af_omega0, "zero or random");
    af->add_option("--direction", af_direction, "ones or site:<k>");
    af->add_option("--grid", af_grid)->check(CLI::PositiveNumber);
    af->add_option("--alpha-min", af_min);
    af->add_option("--alpha-max", af_max);
    af->add_option("--f", af_f, "random or delta:<site>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (sm->parsed()) return run_spectral_measure(opts, sm_dim, sm_alpha);
        if (sw->parsed())
            return run_sweep_alpha(opts, sw_dim, sw_grid, sw_min, sw_max, sw_f, sw_jitter);
        if (ak->parsed()) return run_ak_check(opts, ak_dim, ak_alpha, ak_beta, ak_grid);
        if (ck->parsed()) return run_clark(opts, ck_theta, ck_n, ck_degree, ck_gamma);
        if (av->parsed()) return run_average(opts, av_n, av_degree, av_gquad);
        if (ls->parsed()) return run_level_sets(opts, ls_n, ls_c, ls_poly, ls_coeffs);
        if (pw->parsed())
            return run_pw_euler(opts, pw_bandwidth, pw_terms, pw_span, pw_oversample, pw_c_at);
        if (am->parsed())
            return run_anderson_mc(opts, am_config, am_sides, am_dist, am_samples, am_tv);
        if (af->parsed())
            return run_affine_sweep(opts, af_sides, af_omega0, af_direction, af_grid, af_min,
                                    af_max, af_f);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
