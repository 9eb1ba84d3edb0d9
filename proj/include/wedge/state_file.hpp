#pragma once

// State files: a JSON document
//
//   {"dims": [3, 3],
//    "amplitudes": [{"index": [0, 0], "re": 0.577..., "im": 0.0}, ...]}
//
// listing only the nonzero amplitudes. Unlisted indices are zero; field order
// is irrelevant.

#include <filesystem>

#include <json.hpp>

#include "wedge/states.hpp"

namespace wedge::io {

// Throws ValidationError naming the offending key. With `renormalize` an
// unnormalized (but nonzero) amplitude list is rescaled instead of rejected.
PureState parse_state_file(const nlohmann::json& doc, bool renormalize = false);
PureState read_state_file(const std::filesystem::path& path, bool renormalize = false);

// Nonzero amplitudes in row-major order.
nlohmann::json to_state_file(const PureState& state);

}  // namespace wedge::io
