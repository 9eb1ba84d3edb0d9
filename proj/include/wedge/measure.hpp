#pragma once

// Geometric entanglement measures built from wedge norms of post-measurement
// vectors.

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "wedge/states.hpp"

namespace wedge {

enum class MeasureMode {
  // 9 |eta_0 ^ eta_1 ^ eta_2|^2 + 2 sum_{i<j} |eta_i ^ eta_j|^2; two qutrits only.
  qutrit,
  // Unit weight on every wedge order 2..r, except that the pair order carries
  // weight 2 when r == 3 (the drop-one wedges are then pairs themselves).
  literal,
  // `literal` divided by its value on the maximally entangled state of the
  // same shape, so the maximum is 1.
  normalized,
};

std::string_view to_string(MeasureMode mode);
MeasureMode parse_measure_mode(std::string_view text);

// `qutrit` for dims [3,3], `literal` otherwise.
MeasureMode default_mode(const std::vector<int>& dims);

struct MeasureReport {
  double value = 0.0;
  // |wedge of the whole family|^2; 0 when there are more vectors than the
  // ambient dimension.
  double volume_sq = 0.0;
  // order k -> sum over k-subsets of squared wedge norms, k = 2..max_order.
  std::map<int, double> wedge_terms_by_order;
  MeasureMode mode = MeasureMode::literal;
  int vector_count = 0;
  int ambient_dim = 0;
  // min(vector_count, ambient_dim): the highest order that can be nonzero.
  int max_order = 0;
};

// Two-qutrit measure from the family of party `side` (0 = first party's
// outcomes, rows of the coefficient matrix; 1 = second party's, columns).
MeasureReport eg_two_qutrit(const PureState& state, int side = 0);

// Same value straight from the 3x3 coefficient matrix (rows are eta_i). Used
// by the optimizer's inner loop.
double eg_two_qutrit_value(const Eigen::Matrix3cd& coefficients);

// Weight of the order-k term under `literal` when the top order is max_order.
double literal_weight(int order, int max_order);

// `literal` value of the maximally entangled state with Schmidt rank r.
double literal_maximum(int rank);

MeasureReport eg_bipartite(const PureState& state, const Bipartition& bp, MeasureMode mode);

enum class Counting {
  each_bipartition_once,  // measured sides containing party 0
  all_subsets,            // every nonempty proper subset; each cut counted twice
};

std::string_view to_string(Counting counting);

struct BipartitionTerm {
  std::vector<int> measured;
  MeasureReport report;
};

struct MultipartiteReport {
  double total = 0.0;
  Counting counting = Counting::each_bipartition_once;
  std::vector<BipartitionTerm> breakdown;  // sorted by measured side
};

// Sum of `literal` bipartite values over the cuts selected by `counting`.
MultipartiteReport eg_multipartite(const PureState& state, Counting counting);

// sqrt(2 (1 - Tr rho^2)) from the density-matrix purity, never from wedges.
double i_concurrence(const PureState& state, const Bipartition& bp);

}  // namespace wedge
