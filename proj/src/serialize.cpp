#include "rankone/serialize.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

namespace rankone {

namespace {

Json finite_or_null(double x) {
    if (std::isfinite(x)) return x;
    return nullptr;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json measure_json(const AtomicMeasure& mu) {
    Json atoms = Json::array();
    for (const Atom& a : mu.atoms()) {
        Json loc = (mu.kind() == SupportKind::RealLine) ? Json(a.location.real())
                                                        : complex_json(a.location);
        atoms.push_back(Json{{"loc", std::move(loc)}, {"w", a.weight}});
    }
    return Json{{"kind", mu.kind() == SupportKind::RealLine ? "real-line" : "unit-circle"},
                {"atoms", std::move(atoms)},
                {"total_mass", mu.total_mass()}};
}

Json decomposition_json(const SpectralDecomposition& d) {
    Json values = Json::array();
    for (int k = 0; k < d.dim(); ++k) {
        if (d.kind == SupportKind::RealLine)
            values.push_back(d.eigenvalues(k).real());
        else
            values.push_back(complex_json(d.eigenvalues(k)));
    }
    Json vectors = Json::array();
    for (int k = 0; k < d.dim(); ++k) {
        Json col = Json::array();
        for (int i = 0; i < d.dim(); ++i) col.push_back(complex_json(d.eigenvectors(i, k)));
        vectors.push_back(std::move(col));
    }
    return Json{{"kind", d.kind == SupportKind::RealLine ? "real-line" : "unit-circle"},
                {"eigenvalues", std::move(values)},
                {"eigenvectors", std::move(vectors)},
                {"min_gap", finite_or_null(d.min_gap())}};
}

Json blaschke_json(const FiniteBlaschke& theta) {
    Json zeros = Json::array();
    for (Complex a : theta.zeros()) zeros.push_back(complex_json(a));
    return Json{{"zeros", std::move(zeros)}, {"constant", complex_json(theta.constant())}};
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Cyclic:
            return "cyclic";
        case Verdict::NotCyclic:
            return "not-cyclic";
        case Verdict::DegenerateSpectrum:
            return "degenerate-spectrum";
    }
    return "unknown";
}

Json cyclicity_report_json(const CyclicityReport& report) {
    Json entries = Json::array();
    for (const CyclicityEntry& e : report.entries) {
        Json parameter = (report.parameter_kind == SupportKind::RealLine)
                             ? Json(e.parameter.real())
                             : complex_json(e.parameter);
        entries.push_back(Json{{"parameter", std::move(parameter)},
                               {"verdict", verdict_name(e.verdict)},
                               {"min_coupling", e.min_coupling},
                               {"min_gap", finite_or_null(e.min_gap)}});
    }
    return Json{{"entries", std::move(entries)},
                {"cyclic", report.cyclic_count()},
                {"not_cyclic", report.noncyclic_count()},
                {"degenerate", report.degenerate_count()}};
}

std::string cyclicity_report_csv(const CyclicityReport& report) {
    std::string out = "parameter,verdict,min_coupling,min_gap\n";
    for (const CyclicityEntry& e : report.entries) {
        // circle parameters are written as their principal argument
        double parameter = (report.parameter_kind == SupportKind::RealLine)
                               ? e.parameter.real()
                               : arg_2pi(e.parameter);
        out += format_double(parameter);
        out += ',';
        out += verdict_name(e.verdict);
        out += ',';
        out += format_double(e.min_coupling);
        out += ',';
        out += format_double(e.min_gap);
        out += '\n';
    }
    return out;
}

Json mc_report_json(const MCReport& report) {
    Json failures = Json::array();
    for (const MCReport::Failure& f : report.failures)
        failures.push_back(Json{{"sample_index", f.sample_index},
                                {"min_coupling", f.min_coupling},
                                {"min_gap", finite_or_null(f.min_gap)},
                                {"degenerate", f.degenerate}});
    return Json{{"samples", report.samples},
                {"cyclic", report.cyclic_count},
                {"not_cyclic", report.noncyclic_count},
                {"degenerate", report.degenerate_count},
                {"absolutely_continuous", report.absolutely_continuous},
                {"failures", std::move(failures)}};
}

Json level_set_json(const LevelSetContainment& report) {
    Json roots = Json::array();
    for (const auto& r : report.roots)
        roots.push_back(Json{{"root", complex_json(r.z)},
                             {"nth_power", complex_json(r.nth_power)},
                             {"distance", r.distance}});
    Json j{{"roots", std::move(roots)}, {"contained", report.contained}};
    j["target"] = report.target ? complex_json(*report.target) : Json(nullptr);
    return j;
}

Json run_envelope(const std::string& command, Json config, Json body) {
    return Json{{"schema", "rank-one-lab/1"},
                {"header",
                 Json{{"timestamp", iso_timestamp()},
                      {"command", command},
                      {"config", std::move(config)}}},
                {"body", std::move(body)}};
}

std::string body_bytes(const Json& envelope) { return envelope.at("body").dump(2); }

}  // namespace rankone
