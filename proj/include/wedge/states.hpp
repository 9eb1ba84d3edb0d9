#pragma once

// Pure multi-qudit states and the post-measurement vectors of a bipartition.
//
// Amplitudes are stored densely in row-major order with party 0 slowest, so a
// basis state |i_0 i_1 ... i_{n-1}> lives at
//   ((i_0 * d_1 + i_1) * d_2 + i_2) ... .

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wedge/exterior.hpp"

namespace wedge {

inline constexpr double kNormTolerance = 1e-9;

using MultiIndex = std::vector<int>;

class PureState {
 public:
  // Rejects amplitudes whose squared norm is off by more than kNormTolerance.
  PureState(std::vector<int> dims, ComplexVector amplitudes);

  // Rescales to unit norm first; throws if the input is the zero vector.
  static PureState normalized(std::vector<int> dims, ComplexVector amplitudes);

  // The computational basis state |index>.
  static PureState basis(std::vector<int> dims, const MultiIndex& index);

  const std::vector<int>& dims() const { return dims_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  int parties() const { return static_cast<int>(dims_.size()); }

  Complex amplitude(const MultiIndex& index) const;
  Eigen::Index flat_index(const MultiIndex& index) const;
  MultiIndex multi_index(Eigen::Index flat) const;

 private:
  std::vector<int> dims_;
  ComplexVector amplitudes_;
};

// The measured side of a split of n parties; the complement is implied.
class Bipartition {
 public:
  Bipartition(std::vector<int> measured, int parties);

  const std::vector<int>& measured() const { return measured_; }
  std::vector<int> complement() const;
  int parties() const { return parties_; }
  Bipartition flipped() const { return Bipartition(complement(), parties_); }

  bool operator==(const Bipartition&) const = default;

 private:
  std::vector<int> measured_;
  int parties_;
};

// One unnormalized vector on the complement per basis outcome of the measured
// side, ordered row-major over the measured parties (ascending party index).
struct PostMeasurementFamily {
  std::vector<ComplexVector> vectors;
  std::vector<int> dims;  // of the parent state
  std::vector<int> measured;
  std::vector<int> complement;

  Eigen::Index ambient_dim() const {
    return vectors.empty() ? 0 : vectors.front().size();
  }
};

class LocalUnitary {
 public:
  // Rejects matrices with |U U^dagger - I| > 1e-9 in any entry.
  LocalUnitary(int party, ComplexMatrix matrix);

  int party() const { return party_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  int party_;
  ComplexMatrix matrix_;
};

PostMeasurementFamily post_measurement_vectors(const PureState& state, const Bipartition& bp);

// Inverse of post_measurement_vectors: sum_i |i>_measured (x) vectors[i].
PureState reconstruct(const PostMeasurementFamily& family);

PureState apply_local_unitary(const PureState& state, const LocalUnitary& u);

// Haar-distributed d x d unitary: QR of a complex Gaussian matrix with the
// phases of R's diagonal pushed into Q. Deterministic per seed.
ComplexMatrix random_unitary(int d, std::uint64_t seed);

// Tr(rho^2) of the reduced state on the complement of bp, from an explicit
// partial trace of |psi><psi|.
double reduced_purity(const PureState& state, const Bipartition& bp);

// Complex Gaussian amplitudes on `support` (every basis index when absent),
// normalized. Deterministic per seed.
PureState random_state(const std::vector<int>& dims,
                       const std::optional<std::vector<MultiIndex>>& support,
                       std::uint64_t seed);

// Bipartite d_a x d_b state built from `rank` random product terms, so its
// Schmidt rank equals `rank` with probability 1.
PureState random_schmidt_rank_state(int d_a, int d_b, int rank, std::uint64_t seed);

// Two-qutrit helpers: A(i, j) is the amplitude of |ij>, so row i is eta_i.
Eigen::Matrix3cd coefficient_matrix(const PureState& state);
PureState from_coefficient_matrix(const Eigen::Matrix3cd& a);

}  // namespace wedge
