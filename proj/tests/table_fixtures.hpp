#pragma once

// One two-qutrit state per row of the published support tables, with the
// geometry and maximization outcome each row reports.
//
// Coefficient letters follow the usual labelling
//   a|00> + b|01> + c|02> + p|10> + q|11> + r|12> + x|20> + y|21> + z|22>.

#include <optional>
#include <string>
#include <vector>

#include "wedge/classify.hpp"
#include "wedge/optimize.hpp"

namespace fixtures {

using wedge::Complex;
using wedge::EntanglementClass;

struct TableRow {
  std::string name;
  std::string support;
  std::vector<Complex> coefficients;  // in support order, before normalization
  EntanglementClass expected_class;
  int expected_op;
  std::vector<int> table_op;  // every count the row allows
  std::optional<double> attained_max;  // set when the maximum is attained
  std::string vanishing;  // letters that tend to zero at the supremum
};

inline int letter_flat_index(char letter) {
  const std::string letters = "abcpqrxyz";
  return static_cast<int>(letters.find(letter));
}

inline const std::vector<TableRow>& table_rows() {
  using C = Complex;
  const C g0{0.7, 0.3}, g1{-0.4, 0.9}, g2{1.1, -0.2}, g3{0.5, 0.6}, g4{-0.8, -0.35}, g5{0.3, 1.2};
  using E = EntanglementClass;
  static const std::vector<TableRow> rows = {
      {"I", "00,11", {g0, g1}, E::type_i, 1, {1}, 0.5, ""},
      {"II.1", "00,11,22", {g0, g1, g2}, E::type_ii, 3, {3}, 1.0, ""},
      {"II.2", "00,01,10", {g0, g1, g2}, E::type_i, 0, {0}, std::nullopt, "a"},
      {"II.3", "00,01,22", {g0, g1, g2}, E::type_i, 1, {1}, 0.5, ""},
      {"III.1", "00,01,02,10", {g0, g1, g2, g3}, E::type_i, 0, {0}, std::nullopt, "a"},
      {"III.2", "00,01,10,12", {g0, g1, g2, g3}, E::type_i, 0, {0}, std::nullopt, "p"},
      {"III.3", "00,01,10,22", {g0, g1, g2, g3}, E::type_iii, 2, {2}, std::nullopt, "a"},
      {"III.4", "00,01,10,11", {g0, g1, g2, g3}, E::type_i, 0, {0, 1}, 0.5, ""},
      {"III.5", "00,01,12,22", {g0, g1, g2, g3}, E::type_i, 2, {2}, 0.5, ""},
      {"IV.1", "00,01,02,10,11", {g0, g1, g2, g3, g4}, E::type_i, 0, {0, 1}, 0.5, ""},
      {"IV.2", "00,01,10,11,22", {1.0, 2.0, 3.0, 1.0, 1.0}, E::type_iii, 2, {2, 3}, 1.0, ""},
      // Only the a = 0 face has the two orthogonal pairs the row lists.
      {"IV.3", "00,01,02,10,20", {0.0, g1, g2, g3, g4}, E::type_i, 2, {2}, std::nullopt, "a"},
      {"IV.4", "00,01,02,10,21", {g0, g1, g2, g3, g4}, E::type_iii, 1, {1}, std::nullopt, "ab"},
      {"IV.5", "00,01,10,12,21", {g0, g1, g2, g3, g4}, E::type_iii, 1, {1}, std::nullopt, "bp"},
      {"IV.6", "00,01,10,12,22", {g0, g1, g2, g3, g4}, E::type_iii, 1, {1}, std::nullopt, "ar"},
      {"V.1", "00,01,02,10,11,12", {g0, g1, g2, g3, g4, g5}, E::type_i, 0, {0, 1}, 0.5, ""},
      {"V.2", "00,01,10,12,21,22", {g0, g1, g2, g3, g4, g5}, E::type_iii, 0, {0}, std::nullopt, "bpz"},
      {"V.3", "00,01,02,10,11,20", {g0, g1, g2, g3, g4, g5}, E::type_iii, 0, {0, 1}, std::nullopt, "abp"},
      {"V.4", "00,01,02,10,11,22", {g0, g1, g2, g3, g4, g5}, E::type_iii, 1, {1, 2}, std::nullopt, "c"},
  };
  return rows;
}

inline wedge::PureState fixture_state(const TableRow& row) {
  const auto support = wedge::SupportPattern::parse(row.support);
  wedge::ComplexVector amps = wedge::ComplexVector::Zero(9);
  for (std::size_t i = 0; i < support.indices.size(); ++i) {
    amps(support.indices[i][0] * 3 + support.indices[i][1]) = row.coefficients[i];
  }
  return wedge::PureState::normalized({3, 3}, amps);
}

inline std::vector<wedge::MultiIndex> vanishing_indices(const TableRow& row) {
  std::vector<wedge::MultiIndex> out;
  for (char c : row.vanishing) {
    const int flat = letter_flat_index(c);
    out.push_back({flat / 3, flat % 3});
  }
  return out;
}

}  // namespace fixtures
