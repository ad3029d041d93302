#ifndef DOMRATIO_REPORT_JSON_HPP
#define DOMRATIO_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include "domratio/construction.hpp"
#include "domratio/solvers.hpp"
#include "domratio/verify.hpp"

namespace domratio {

// Documented in docs/output-schema.md; bump when emitted fields change.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatioReport& r);
RatioReport ratio_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PeelingStep& s);
nlohmann::json to_json(const PeelingTrace& t);
nlohmann::json to_json(const BoundCertificate& c);
BoundCertificate certificate_from_json(const nlohmann::json& j);
PeelingTrace trace_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TreeCase& c);
TreeCase tree_case_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LineGraphReport& r);
LineGraphReport linegraph_report_from_json(const nlohmann::json& j);

// Envelope used on every emitted line: {"schema_version":..,"type":..,...}.
nlohmann::json envelope(const std::string& type, nlohmann::json body);

}  // namespace domratio

#endif
