#include "wedge/measure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "wedge/error.hpp"

namespace wedge {
namespace {

// Past this many subsets the order sums switch to the spectral route.
constexpr double kSubsetBudget = 2e5;

double qutrit_value(double volume_sq, double pair_sum) { return 9.0 * volume_sq + 2.0 * pair_sum; }

std::vector<double> order_sums_for(std::span<const ComplexVector> vectors, int max_order) {
  double subsets = 0.0;
  for (int k = 3; k <= max_order; ++k) subsets += exterior::binomial(static_cast<int>(vectors.size()), k);
  if (subsets <= kSubsetBudget) return exterior::order_sums(vectors, max_order);
  std::vector<double> sums = exterior::order_sums_spectral(vectors, max_order);
  sums[2] = exterior::pairwise_wedge_sum(vectors);
  return sums;
}

}  // namespace

std::string_view to_string(MeasureMode mode) {
  switch (mode) {
    case MeasureMode::qutrit: return "qutrit";
    case MeasureMode::literal: return "literal";
    case MeasureMode::normalized: return "normalized";
  }
  return "?";
}

MeasureMode parse_measure_mode(std::string_view text) {
  if (text == "qutrit") return MeasureMode::qutrit;
  if (text == "literal") return MeasureMode::literal;
  if (text == "normalized") return MeasureMode::normalized;
  throw ValidationError("unknown measure mode '" + std::string(text) + "'");
}

std::string_view to_string(Counting counting) {
  return counting == Counting::each_bipartition_once ? "once" : "all";
}

MeasureMode default_mode(const std::vector<int>& dims) {
  return dims == std::vector<int>{3, 3} ? MeasureMode::qutrit : MeasureMode::literal;
}

MeasureReport eg_two_qutrit(const PureState& state, int side) {
  if (state.dims() != std::vector<int>{3, 3}) throw ValidationError("eg_two_qutrit: expected dims [3,3]");
  if (side != 0 && side != 1) throw ValidationError("eg_two_qutrit: side must be 0 or 1");
  const auto family = post_measurement_vectors(state, Bipartition({side}, 2));
  MeasureReport report;
  report.mode = MeasureMode::qutrit;
  report.vector_count = 3;
  report.ambient_dim = 3;
  report.max_order = 3;
  report.volume_sq = exterior::wedge_norm_sq(family.vectors);
  report.wedge_terms_by_order[2] = exterior::pairwise_wedge_sum(family.vectors);
  report.wedge_terms_by_order[3] = report.volume_sq;
  report.value = qutrit_value(report.volume_sq, report.wedge_terms_by_order[2]);
  return report;
}

double eg_two_qutrit_value(const Eigen::Matrix3cd& coefficients) {
  const std::array<ComplexVector, 3> rows{coefficients.row(0).transpose(), coefficients.row(1).transpose(),
                                          coefficients.row(2).transpose()};
  return qutrit_value(exterior::wedge_norm_sq(rows), exterior::pairwise_wedge_sum(rows));
}

double literal_weight(int order, int max_order) { return (order == 2 && max_order == 3) ? 2.0 : 1.0; }

double literal_maximum(int rank) {
  double total = 0.0;
  for (int k = 2; k <= rank; ++k) {
    total += literal_weight(k, rank) * exterior::binomial(rank, k) * std::pow(1.0 / rank, k);
  }
  return total;
}

MeasureReport eg_bipartite(const PureState& state, const Bipartition& bp, MeasureMode mode) {
  if (mode == MeasureMode::qutrit) {
    if (state.dims() != std::vector<int>{3, 3}) {
      throw ValidationError("mode qutrit requires a two-qutrit state (dims [3,3])");
    }
    return eg_two_qutrit(state, bp.measured().front());
  }

  const auto family = post_measurement_vectors(state, bp);
  MeasureReport report;
  report.mode = mode;
  report.vector_count = static_cast<int>(family.vectors.size());
  report.ambient_dim = static_cast<int>(family.ambient_dim());
  report.max_order = std::min(report.vector_count, report.ambient_dim);
  if (report.vector_count <= report.ambient_dim) report.volume_sq = exterior::wedge_norm_sq(family.vectors);

  const std::vector<double> sums = order_sums_for(family.vectors, report.max_order);
  double literal = 0.0;
  for (int k = 2; k <= report.max_order; ++k) {
    const double term = sums[static_cast<std::size_t>(k)];
    report.wedge_terms_by_order[k] = term;
    literal += literal_weight(k, report.max_order) * term;
  }
  report.value = mode == MeasureMode::normalized ? literal / literal_maximum(report.max_order) : literal;
  return report;
}

MultipartiteReport eg_multipartite(const PureState& state, Counting counting) {
  const int n = state.parties();
  if (n < 2) throw ValidationError("eg_multipartite: need at least two parties");
  if (n > 20) throw ValidationError("eg_multipartite: too many parties");

  std::vector<std::vector<int>> sides;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    if (counting == Counting::each_bipartition_once && !(mask & 1u)) continue;
    std::vector<int> side;
    for (int p = 0; p < n; ++p) {
      if (mask & (1u << p)) side.push_back(p);
    }
    sides.push_back(std::move(side));
  }
  std::sort(sides.begin(), sides.end());

  MultipartiteReport result;
  result.counting = counting;
  for (auto& side : sides) {
    BipartitionTerm term{side, eg_bipartite(state, Bipartition(side, n), MeasureMode::literal)};
    result.total += term.report.value;
    result.breakdown.push_back(std::move(term));
  }
  return result;
}

double i_concurrence(const PureState& state, const Bipartition& bp) {
  const double purity = reduced_purity(state, bp);
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

}  // namespace wedge
