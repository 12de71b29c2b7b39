#pragma once

#include <string>

#include "json.hpp"
#include "quatcoh/algebra.hpp"
#include "quatcoh/cohomology.hpp"
#include "quatcoh/metric.hpp"
#include "quatcoh/session.hpp"
#include "quatcoh/sl_structure.hpp"
#include "quatcoh/suite.hpp"

namespace quatcoh {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  SearchBounds bounds;
  bool include_suite = true;
};

Json matrix_json(const Matrix& m);
/// The instantiated algebra in the input document format.
Json algebra_json(const Algebra& alg);
Json validation_json(const ValidationReport& r);
Json table_json(const CohomologyTable& t);
Json candidate_json(const Session& s, const MetricCandidate& c);
Json verdict_json(const Session& s, const ExistenceVerdict& v);
Json decomposition_json(const Session& s, const std::optional<SelfDualReport>& sd, const JbarReport& jb);
Json pairing_json(const Session& s, const PairingResult& pr);
Json suite_json(const SuiteReport& r);

/// Full report document: "input", "results" (every number), "details"
/// (bases, certificates, pairing matrices) and "suite".
/// Throws TheoremViolation from the underlying computations.
Json build_report(const Session& s, const ReportOptions& opts);

/// Human rendering of build_report output; reads only the document.
std::string render_report(const Json& report);
std::string render_validation(const Json& v);
std::string render_verdict(const Json& v);
std::string render_decomposition(const Json& d);
std::string render_pairing(const Json& p);
std::string render_suite(const Json& s);

}  // namespace quatcoh
