#pragma once

// Geometric classes of two-qutrit pure states, read off the parallelepiped
// spanned by the first party's post-measurement vectors eta_0, eta_1, eta_2:
//
//   separable  all eta_i parallel (rank 1)
//   type I     planar (rank 2)
//   type II    rank 3, the three vectors mutually orthogonal
//   type III   rank 3, at least one non-orthogonal pair

#include <array>
#include <span>
#include <string_view>

#include "wedge/states.hpp"

namespace wedge {

enum class EntanglementClass { separable, type_i, type_ii, type_iii };

std::string_view to_string(EntanglementClass c);

inline constexpr double kDefaultRankTolerance = 1e-8;
inline constexpr double kDefaultOrthoTolerance = 1e-8;

struct GeometryReport {
  int rank = 0;
  bool planar = false;
  int orthogonal_pairs = 0;
  double volume_sq = 0.0;  // |det A|^2 as the squared product of singular values
  std::array<double, 3> areas_sq{};  // pairs (0,1), (1,2), (2,0)
  EntanglementClass entanglement_class = EntanglementClass::separable;

  // Raw geometry so callers can re-threshold.
  std::array<double, 3> singular_values{};  // descending
  std::array<double, 3> norms{};
  std::array<Complex, 3> inner_products{};  // <eta_0,eta_1>, <eta_1,eta_2>, <eta_2,eta_0>

  double tol_rank = kDefaultRankTolerance;
  double tol_ortho = kDefaultOrthoTolerance;
  // volume_sq <= tol_vol exactly when rank <= 2.
  double tol_vol = 0.0;
};

// Unordered pairs with |<v_i,v_j>| < tol_ortho |v_i| |v_j|. Pairs involving a
// zero vector (norm <= zero_tol times the largest norm) are not counted.
int orthogonal_pair_count(std::span<const ComplexVector> family, double tol_ortho = kDefaultOrthoTolerance,
                          double zero_tol = kDefaultRankTolerance);

GeometryReport classify_two_qutrit(const PureState& state, double tol_rank = kDefaultRankTolerance,
                                   double tol_ortho = kDefaultOrthoTolerance);

}  // namespace wedge
