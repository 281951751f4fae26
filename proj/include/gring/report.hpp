#pragma once

#include <nlohmann/json.hpp>

#include "gring/axioms.hpp"
#include "gring/laws.hpp"
#include "gring/pi0.hpp"

namespace gring {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportFormat = "gamma-report/1";

// One result entry per check, with counts and any stored witnesses.
nlohmann::ordered_json check_report_results(const CheckReport& report);

// One result entry per law condition.
nlohmann::ordered_json certificate_results(const LawCertificate& cert);

// The certificate as a nested object, for embedding in detail fields.
nlohmann::ordered_json certificate_json(const LawCertificate& cert);

nlohmann::ordered_json presentation_json(const AbelianPresentation& pres,
                                         const GammaRingModel& model);

nlohmann::ordered_json classification_json(const LawClassification& cls,
                                           const GammaRingModel& model);

}  // namespace gring
