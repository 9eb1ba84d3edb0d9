#pragma once

// JSON encodings of the library's reports. Doubles are written with
// shortest round-trip precision, so parse(dump(doc)) == doc.

#include <string>

#include <json.hpp>

#include "wedge/classify.hpp"
#include "wedge/measure.hpp"
#include "wedge/optimize.hpp"

namespace wedge::report {

inline constexpr const char* kToolName = "wedge";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const MeasureReport& r);
nlohmann::json to_json(const MultipartiteReport& r);
nlohmann::json to_json(const GeometryReport& r);
nlohmann::json to_json(const OptimizationResult& r, const SupportPattern& support, const OptimizerConfig& config);

// Envelope shared by every command: tool, version, command, tolerances,
// result and (unless reproducible) a UTC timestamp.
nlohmann::json document(const std::string& command, nlohmann::json tolerances, nlohmann::json result,
                        bool reproducible);

}  // namespace wedge::report
