#include "wedge/report.hpp"

#include <chrono>
#include <ctime>

#include "wedge/state_file.hpp"

namespace wedge::report {

using nlohmann::json;

namespace {

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json trace_json(const std::vector<TracePoint>& trace) {
  json out = json::array();
  for (const auto& p : trace) out.push_back({p.iteration, p.value});
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

json to_json(const MeasureReport& r) {
  json orders = json::object();
  for (const auto& [k, v] : r.wedge_terms_by_order) orders[std::to_string(k)] = v;
  return {{"value", r.value},
          {"volume_sq", r.volume_sq},
          {"wedge_terms_by_order", std::move(orders)},
          {"mode", std::string(to_string(r.mode))},
          {"vector_count", r.vector_count},
          {"ambient_dim", r.ambient_dim},
          {"max_order", r.max_order}};
}

json to_json(const MultipartiteReport& r) {
  json breakdown = json::array();
  for (const auto& term : r.breakdown) {
    breakdown.push_back({{"measured", term.measured}, {"value", term.report.value}, {"report", to_json(term.report)}});
  }
  return {{"total", r.total}, {"counting", std::string(to_string(r.counting))}, {"breakdown", std::move(breakdown)}};
}

json to_json(const GeometryReport& r) {
  json inner = json::array();
  for (const auto& z : r.inner_products) inner.push_back(complex_json(z));
  return {{"class", std::string(to_string(r.entanglement_class))},
          {"rank", r.rank},
          {"planar", r.planar},
          {"orthogonal_pairs", r.orthogonal_pairs},
          {"volume_sq", r.volume_sq},
          {"areas_sq", r.areas_sq},
          {"singular_values", r.singular_values},
          {"norms", r.norms},
          {"inner_products", std::move(inner)},
          {"tol_rank", r.tol_rank},
          {"tol_ortho", r.tol_ortho},
          {"tol_vol", r.tol_vol}};
}

json to_json(const OptimizationResult& r, const SupportPattern& support, const OptimizerConfig& config) {
  json restarts = json::array();
  for (const auto& run : r.restarts) {
    restarts.push_back({{"value", run.value},
                        {"iterations", run.iterations},
                        {"converged", run.converged},
                        {"boundary_indices", run.boundary_indices}});
  }
  json magnitudes = json::array();
  for (const auto& idx : support.indices) {
    magnitudes.push_back({{"index", idx}, {"magnitude", std::abs(r.best_state.amplitude(idx))}});
  }
  return {{"support", support.to_string()},
          {"seed", config.seed},
          {"best_value", r.best_value},
          {"attained", r.attained},
          {"boundary_indices", r.boundary_indices},
          {"best_state", io::to_state_file(r.best_state)},
          {"magnitudes", std::move(magnitudes)},
          {"best_restart", r.best_restart},
          {"restarts_used", r.restarts_used},
          {"restarts", std::move(restarts)},
          {"trace", trace_json(r.trace)}};
}

json document(const std::string& command, json tolerances, json result, bool reproducible) {
  json doc = {{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"tolerances", std::move(tolerances)},
              {"result", std::move(result)}};
  if (!reproducible) doc["timestamp"] = utc_timestamp();
  return doc;
}

}  // namespace wedge::report
