#include "wedge/classify.hpp"

#include <algorithm>
#include <cmath>

#include "wedge/error.hpp"

namespace wedge {

std::string_view to_string(EntanglementClass c) {
  switch (c) {
    case EntanglementClass::separable: return "SEPARABLE";
    case EntanglementClass::type_i: return "TYPE_I";
    case EntanglementClass::type_ii: return "TYPE_II";
    case EntanglementClass::type_iii: return "TYPE_III";
  }
  return "?";
}

int orthogonal_pair_count(std::span<const ComplexVector> family, double tol_ortho, double zero_tol) {
  if (family.size() != 3) throw ValidationError("orthogonal_pair_count: expected exactly three vectors");
  std::array<double, 3> norms{};
  for (std::size_t i = 0; i < 3; ++i) norms[i] = family[i].norm();
  const double largest = *std::max_element(norms.begin(), norms.end());
  int count = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (norms[i] <= zero_tol * largest || norms[j] <= zero_tol * largest) continue;
      if (std::abs(exterior::inner(family[i], family[j])) < tol_ortho * norms[i] * norms[j]) ++count;
    }
  }
  return count;
}

GeometryReport classify_two_qutrit(const PureState& state, double tol_rank, double tol_ortho) {
  const Eigen::Matrix3cd a = coefficient_matrix(state);
  const auto family = post_measurement_vectors(state, Bipartition({0}, 2));

  GeometryReport report;
  report.tol_rank = tol_rank;
  report.tol_ortho = tol_ortho;

  Eigen::JacobiSVD<Eigen::Matrix3cd> svd(a);
  const Eigen::Vector3d sv = svd.singularValues();
  for (int i = 0; i < 3; ++i) report.singular_values[static_cast<std::size_t>(i)] = sv(i);
  const double top = sv(0);
  report.rank = static_cast<int>((sv.array() > tol_rank * top).count());
  report.planar = report.rank <= 2;
  const double floor = tol_rank * top;
  const double second = std::max(sv(1), floor);
  report.tol_vol = (top * second * floor) * (top * second * floor);
  report.volume_sq = (sv(0) * sv(1) * sv(2)) * (sv(0) * sv(1) * sv(2));

  constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
  for (std::size_t p = 0; p < 3; ++p) {
    const auto& u = family.vectors[static_cast<std::size_t>(pairs[p].first)];
    const auto& v = family.vectors[static_cast<std::size_t>(pairs[p].second)];
    report.inner_products[p] = exterior::inner(u, v);
    report.areas_sq[p] = std::max(0.0, u.squaredNorm() * v.squaredNorm() - std::norm(report.inner_products[p]));
  }
  for (std::size_t i = 0; i < 3; ++i) report.norms[i] = family.vectors[i].norm();
  report.orthogonal_pairs = orthogonal_pair_count(family.vectors, tol_ortho, tol_rank);

  if (report.rank <= 1) {
    report.entanglement_class = EntanglementClass::separable;
  } else if (report.rank == 2) {
    report.entanglement_class = EntanglementClass::type_i;
  } else {
    report.entanglement_class =
        report.orthogonal_pairs == 3 ? EntanglementClass::type_ii : EntanglementClass::type_iii;
  }
  return report;
}

}  // namespace wedge
