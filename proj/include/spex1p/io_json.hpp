#pragma once

#include <string>

#include <json.hpp>

#include "spex1p/constructions.hpp"
#include "spex1p/extremal.hpp"
#include "spex1p/one_planarity.hpp"
#include "spex1p/spectral.hpp"

namespace spex1p {

// Certificates travel as lists of [u1, v1, u2, v2] quadruples.
nlohmann::json certificate_to_json(const DrawingCertificate& cert);
DrawingCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const nlohmann::json& j);

nlohmann::json spectral_result_to_json(const SpectralResult& r);
nlohmann::json verdict_to_json(const OnePlanarVerdict& v);
nlohmann::json spex_report_to_json(const SpexReport& r);
nlohmann::json audit_to_json(const InequalityAudit& a);
nlohmann::json replay_to_json(const ReplayReport& r);

// Fixed columns: n,t,candidate,lambda,gap,winner,complete
std::string duel_rows_to_csv(const std::vector<DuelRow>& rows);
std::string spex_report_to_csv(const SpexReport& r);

// Deterministic float formatting shared by every writer.
std::string format_double(double v);

}  // namespace spex1p
