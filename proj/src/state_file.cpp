#include "wedge/state_file.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include "wedge/error.hpp"

namespace wedge::io {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& key, const std::string& problem) {
  throw ValidationError("state file: \"" + key + "\" " + problem);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where.empty() ? key : where + "." + key, "is missing");
  return *it;
}

double require_number(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) fail(where + "." + key, "must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(where + "." + key, "must be finite");
  return d;
}

}  // namespace

PureState parse_state_file(const json& doc, bool renormalize) {
  if (!doc.is_object()) throw ValidationError("state file: top level must be an object");

  const json& dims_json = require(doc, "dims", "");
  if (!dims_json.is_array() || dims_json.empty()) fail("dims", "must be a nonempty list of integers");
  std::vector<int> dims;
  for (const auto& d : dims_json) {
    if (!d.is_number_integer()) fail("dims", "must contain only integers");
    const auto v = d.get<long long>();
    if (v < 2 || v > 64) fail("dims", "entries must be between 2 and 64");
    dims.push_back(static_cast<int>(v));
  }
  Eigen::Index size = 1;
  for (int d : dims) {
    size *= d;
    if (size > (1 << 24)) fail("dims", "describes a state too large for dense storage");
  }

  const json& amps_json = require(doc, "amplitudes", "");
  if (!amps_json.is_array()) fail("amplitudes", "must be a list of records");
  ComplexVector amps = ComplexVector::Zero(size);
  std::set<Eigen::Index> seen;
  for (std::size_t n = 0; n < amps_json.size(); ++n) {
    const std::string where = "amplitudes[" + std::to_string(n) + "]";
    const json& rec = amps_json[n];
    if (!rec.is_object()) fail(where, "must be an object");
    const json& index = require(rec, "index", where);
    if (!index.is_array() || index.size() != dims.size()) {
      fail(where + ".index", "must list one integer per party");
    }
    Eigen::Index flat = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) {
      if (!index[p].is_number_integer()) fail(where + ".index", "must contain only integers");
      const auto i = index[p].get<long long>();
      if (i < 0 || i >= dims[p]) fail(where + ".index", "is out of bounds for dims");
      flat = flat * dims[p] + i;
    }
    if (!seen.insert(flat).second) fail(where + ".index", "duplicates an earlier index");
    amps(flat) = Complex(require_number(rec, "re", where), require_number(rec, "im", where));
  }

  if (renormalize) return PureState::normalized(std::move(dims), std::move(amps));
  const double norm_sq = amps.squaredNorm();
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    fail("amplitudes", "are not normalized (squared norm " + std::to_string(norm_sq) +
                           "); pass --renormalize to rescale");
  }
  return PureState(std::move(dims), std::move(amps));
}

PureState read_state_file(const std::filesystem::path& path, bool renormalize) {
  std::ifstream in(path);
  if (!in) throw ValidationError("state file: cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("state file: " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_state_file(doc, renormalize);
}

json to_state_file(const PureState& state) {
  json amps = json::array();
  for (Eigen::Index flat = 0; flat < state.amplitudes().size(); ++flat) {
    const Complex a = state.amplitudes()(flat);
    if (a == Complex{}) continue;
    amps.push_back({{"index", state.multi_index(flat)}, {"re", a.real()}, {"im", a.imag()}});
  }
  return {{"dims", state.dims()}, {"amplitudes", std::move(amps)}};
}

}  // namespace wedge::io
