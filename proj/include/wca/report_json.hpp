#pragma once

#include <json.hpp>

#include "wca/noniso.hpp"
#include "wca/wca.hpp"

namespace wca {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kSolverVersion = "0.1.0";

nlohmann::json config_to_json(const SolverConfig& cfg);
nlohmann::json report_to_json(const Report& rep, const SolverConfig& cfg);
nlohmann::json noniso_report_to_json(const NonIsoReport& rep, const SolverConfig& cfg);

} // namespace wca
