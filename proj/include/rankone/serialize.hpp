// JSON and CSV report serialization.
//
// Schema "rank-one-lab/1": complex numbers as {"re": x, "im": y}; measures as
// {"kind": ..., "atoms": [{"loc": ..., "w": ...}]}; sweep reports as arrays
// keyed by parameter value. Run artifacts wrap a body in an envelope whose
// header carries the timestamp and the fully-resolved configuration, so the
// body bytes are identical across reruns of the same seeded invocation.
// min_gap is null when the operator has a single eigenvalue (no pairs).

#pragma once

#include "rankone/anderson.hpp"
#include "rankone/blaschke.hpp"
#include "rankone/cyclicity.hpp"
#include "rankone/measure.hpp"
#include "rankone/polynomial.hpp"

#include <json.hpp>

#include <string>

namespace rankone {

using Json = nlohmann::json;

Json complex_json(Complex z);
Json measure_json(const AtomicMeasure& mu);
Json decomposition_json(const SpectralDecomposition& d);
Json blaschke_json(const FiniteBlaschke& theta);
Json cyclicity_report_json(const CyclicityReport& report);
Json mc_report_json(const MCReport& report);
Json level_set_json(const LevelSetContainment& report);

std::string verdict_name(Verdict v);
std::string cyclicity_report_csv(const CyclicityReport& report);

// {"schema": "rank-one-lab/1", "header": {"timestamp", "command", "config"},
//  "body": ...}. Only the header varies between identical runs.
Json run_envelope(const std::string& command, Json config, Json body);

// Serialized body of an envelope; the determinism contract compares these.
std::string body_bytes(const Json& envelope);

}  // namespace rankone
