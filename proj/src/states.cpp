#include "wedge/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "wedge/error.hpp"

namespace wedge {
namespace {

Eigen::Index total_size(const std::vector<int>& dims) {
  if (dims.empty()) throw ValidationError("state: need at least one party");
  Eigen::Index size = 1;
  for (int d : dims) {
    if (d < 2) throw ValidationError("state: every party dimension must be >= 2");
    size *= d;
  }
  return size;
}

// Row-major strides with the first listed party slowest.
std::vector<Eigen::Index> strides_of(const std::vector<int>& dims) {
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
  return strides;
}

Eigen::Index product_of(const std::vector<int>& dims, const std::vector<int>& parties) {
  Eigen::Index p = 1;
  for (int party : parties) p *= dims[static_cast<std::size_t>(party)];
  return p;
}

// Maps a full multi-index to (measured flat index, complement flat index).
struct SplitIndexer {
  std::vector<Eigen::Index> measured_stride;    // per party, 0 if not measured
  std::vector<Eigen::Index> complement_stride;  // per party, 0 if measured

  SplitIndexer(const std::vector<int>& dims, const std::vector<int>& measured,
               const std::vector<int>& complement)
      : measured_stride(dims.size(), 0), complement_stride(dims.size(), 0) {
    Eigen::Index s = 1;
    for (auto it = measured.rbegin(); it != measured.rend(); ++it) {
      measured_stride[static_cast<std::size_t>(*it)] = s;
      s *= dims[static_cast<std::size_t>(*it)];
    }
    s = 1;
    for (auto it = complement.rbegin(); it != complement.rend(); ++it) {
      complement_stride[static_cast<std::size_t>(*it)] = s;
      s *= dims[static_cast<std::size_t>(*it)];
    }
  }
};

Eigen::Index flat_index_of(const std::vector<int>& dims, const MultiIndex& index) {
  if (index.size() != dims.size()) throw ValidationError("state: index arity does not match dims");
  Eigen::Index flat = 0;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (index[p] < 0 || index[p] >= dims[p]) throw ValidationError("state: index out of bounds");
    flat = flat * dims[p] + index[p];
  }
  return flat;
}

template <typename Visit>
void for_each_index(const std::vector<int>& dims, Visit&& visit) {
  MultiIndex index(dims.size(), 0);
  const Eigen::Index size = total_size(dims);
  for (Eigen::Index flat = 0; flat < size; ++flat) {
    visit(flat, index);
    for (std::size_t p = dims.size(); p-- > 0;) {
      if (++index[p] < dims[p]) break;
      index[p] = 0;
    }
  }
}

}  // namespace

// --- PureState --------------------------------------------------------------

PureState::PureState(std::vector<int> dims, ComplexVector amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  const Eigen::Index size = total_size(dims_);
  if (amplitudes_.size() != size) {
    std::ostringstream msg;
    msg << "state: expected " << size << " amplitudes, got " << amplitudes_.size();
    throw ValidationError(msg.str());
  }
  if (!amplitudes_.allFinite()) throw ValidationError("state: non-finite amplitude");
  const double norm_sq = amplitudes_.squaredNorm();
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state: not normalized (squared norm " << norm_sq << ")";
    throw ValidationError(msg.str());
  }
}

PureState PureState::normalized(std::vector<int> dims, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ValidationError("state: cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return PureState(std::move(dims), std::move(amplitudes));
}

PureState PureState::basis(std::vector<int> dims, const MultiIndex& index) {
  ComplexVector amps = ComplexVector::Zero(total_size(dims));
  amps(flat_index_of(dims, index)) = 1.0;
  return PureState(std::move(dims), std::move(amps));
}

Eigen::Index PureState::flat_index(const MultiIndex& index) const { return flat_index_of(dims_, index); }

MultiIndex PureState::multi_index(Eigen::Index flat) const {
  if (flat < 0 || flat >= amplitudes_.size()) throw ValidationError("state: flat index out of range");
  MultiIndex index(dims_.size());
  for (std::size_t p = dims_.size(); p-- > 0;) {
    index[p] = static_cast<int>(flat % dims_[p]);
    flat /= dims_[p];
  }
  return index;
}

Complex PureState::amplitude(const MultiIndex& index) const { return amplitudes_(flat_index(index)); }

// --- Bipartition ------------------------------------------------------------

Bipartition::Bipartition(std::vector<int> measured, int parties)
    : measured_(std::move(measured)), parties_(parties) {
  std::sort(measured_.begin(), measured_.end());
  if (measured_.empty()) throw ValidationError("bipartition: measured side is empty");
  if (std::adjacent_find(measured_.begin(), measured_.end()) != measured_.end()) {
    throw ValidationError("bipartition: repeated party index");
  }
  if (measured_.front() < 0 || measured_.back() >= parties_) {
    throw ValidationError("bipartition: party index out of range");
  }
  if (static_cast<int>(measured_.size()) >= parties_) {
    throw ValidationError("bipartition: measured side must be a proper subset");
  }
}

std::vector<int> Bipartition::complement() const {
  std::vector<int> rest;
  for (int p = 0; p < parties_; ++p) {
    if (!std::binary_search(measured_.begin(), measured_.end(), p)) rest.push_back(p);
  }
  return rest;
}

// --- LocalUnitary -----------------------------------------------------------

LocalUnitary::LocalUnitary(int party, ComplexMatrix matrix) : party_(party), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw ValidationError("local unitary: matrix must be square and nonempty");
  }
  const ComplexMatrix defect =
      matrix_ * matrix_.adjoint() - ComplexMatrix::Identity(matrix_.rows(), matrix_.cols());
  if (defect.cwiseAbs().maxCoeff() > 1e-9) throw ValidationError("local unitary: matrix is not unitary");
}

// --- operations -------------------------------------------------------------

PostMeasurementFamily post_measurement_vectors(const PureState& state, const Bipartition& bp) {
  if (bp.parties() != state.parties()) throw ValidationError("bipartition does not match state parties");
  PostMeasurementFamily family;
  family.dims = state.dims();
  family.measured = bp.measured();
  family.complement = bp.complement();
  const Eigen::Index outcomes = product_of(family.dims, family.measured);
  const Eigen::Index ambient = product_of(family.dims, family.complement);
  family.vectors.assign(static_cast<std::size_t>(outcomes), ComplexVector::Zero(ambient));

  const SplitIndexer split(family.dims, family.measured, family.complement);
  const ComplexVector& amps = state.amplitudes();
  for_each_index(family.dims, [&](Eigen::Index flat, const MultiIndex& index) {
    Eigen::Index m = 0, c = 0;
    for (std::size_t p = 0; p < index.size(); ++p) {
      m += index[p] * split.measured_stride[p];
      c += index[p] * split.complement_stride[p];
    }
    family.vectors[static_cast<std::size_t>(m)](c) = amps(flat);
  });
  return family;
}

PureState reconstruct(const PostMeasurementFamily& family) {
  const Eigen::Index size = total_size(family.dims);
  const Eigen::Index outcomes = product_of(family.dims, family.measured);
  const Eigen::Index ambient = product_of(family.dims, family.complement);
  if (static_cast<Eigen::Index>(family.vectors.size()) != outcomes) {
    throw ValidationError("reconstruct: vector count does not match measured side");
  }
  for (const auto& v : family.vectors) {
    if (v.size() != ambient) throw ValidationError("reconstruct: vector length does not match complement");
  }
  ComplexVector amps(size);
  const SplitIndexer split(family.dims, family.measured, family.complement);
  for_each_index(family.dims, [&](Eigen::Index flat, const MultiIndex& index) {
    Eigen::Index m = 0, c = 0;
    for (std::size_t p = 0; p < index.size(); ++p) {
      m += index[p] * split.measured_stride[p];
      c += index[p] * split.complement_stride[p];
    }
    amps(flat) = family.vectors[static_cast<std::size_t>(m)](c);
  });
  return PureState(family.dims, std::move(amps));
}

PureState apply_local_unitary(const PureState& state, const LocalUnitary& u) {
  const int party = u.party();
  if (party < 0 || party >= state.parties()) throw ValidationError("local unitary: party out of range");
  const int d = state.dims()[static_cast<std::size_t>(party)];
  if (u.matrix().rows() != d) throw ValidationError("local unitary: dimension mismatch with party");

  // View the tensor as (outer, d, inner) and contract the middle index.
  const auto strides = strides_of(state.dims());
  const Eigen::Index inner = strides[static_cast<std::size_t>(party)];
  const Eigen::Index outer = state.amplitudes().size() / (inner * d);
  const ComplexVector& in = state.amplitudes();
  ComplexVector out = ComplexVector::Zero(in.size());
  for (Eigen::Index o = 0; o < outer; ++o) {
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) {
        const Complex m = u.matrix()(r, c);
        if (m == Complex{}) continue;
        for (Eigen::Index i = 0; i < inner; ++i) {
          out((o * d + r) * inner + i) += m * in((o * d + c) * inner + i);
        }
      }
    }
  }
  return PureState(state.dims(), std::move(out));
}

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw ValidationError("random_unitary: dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix z(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(r, c) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < d; ++i) {
    const double mag = std::abs(r(i, i));
    const Complex phase = mag > 0.0 ? r(i, i) / mag : Complex(1.0);
    q.col(i) *= phase;
  }
  return q;
}

double reduced_purity(const PureState& state, const Bipartition& bp) {
  if (bp.parties() != state.parties()) throw ValidationError("bipartition does not match state parties");
  const std::vector<int>& dims = state.dims();
  const std::vector<int> kept = bp.complement();
  const Eigen::Index kept_dim = product_of(dims, kept);
  const Eigen::Index traced_dim = product_of(dims, bp.measured());

  // psi reshaped as (traced, kept); rho = sum_t psi(t, .) psi(t, .)^dagger.
  ComplexMatrix psi = ComplexMatrix::Zero(traced_dim, kept_dim);
  const auto strides = strides_of(dims);
  for (Eigen::Index flat = 0; flat < state.amplitudes().size(); ++flat) {
    Eigen::Index rest = flat, t = 0, k = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) {
      const Eigen::Index digit = rest / strides[p];
      rest %= strides[p];
      if (std::binary_search(kept.begin(), kept.end(), static_cast<int>(p))) {
        k = k * dims[p] + digit;
      } else {
        t = t * dims[p] + digit;
      }
    }
    psi(t, k) = state.amplitudes()(flat);
  }
  ComplexMatrix rho = ComplexMatrix::Zero(kept_dim, kept_dim);
  for (Eigen::Index t = 0; t < traced_dim; ++t) {
    for (Eigen::Index i = 0; i < kept_dim; ++i) {
      for (Eigen::Index j = 0; j < kept_dim; ++j) rho(i, j) += psi(t, i) * std::conj(psi(t, j));
    }
  }
  double purity = 0.0;  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  for (Eigen::Index i = 0; i < kept_dim; ++i) {
    for (Eigen::Index j = 0; j < kept_dim; ++j) purity += std::norm(rho(i, j));
  }
  return purity;
}

PureState random_state(const std::vector<int>& dims, const std::optional<std::vector<MultiIndex>>& support,
                       std::uint64_t seed) {
  const Eigen::Index size = total_size(dims);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector amps = ComplexVector::Zero(size);
  if (!support) {
    for (Eigen::Index i = 0; i < size; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      amps(i) = Complex(re, im);
    }
    return PureState::normalized(dims, std::move(amps));
  }
  if (support->empty()) throw ValidationError("random_state: empty support");
  std::set<Eigen::Index> seen;
  for (const auto& index : *support) {
    const Eigen::Index flat = flat_index_of(dims, index);
    if (!seen.insert(flat).second) throw ValidationError("random_state: duplicate support index");
    const double re = gauss(rng);
    const double im = gauss(rng);
    amps(flat) = Complex(re, im);
  }
  return PureState::normalized(dims, std::move(amps));
}

PureState random_schmidt_rank_state(int d_a, int d_b, int rank, std::uint64_t seed) {
  if (d_a < 2 || d_b < 2) throw ValidationError("random_schmidt_rank_state: dimensions must be >= 2");
  if (rank < 1 || rank > std::min(d_a, d_b)) throw ValidationError("random_schmidt_rank_state: bad rank");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&](int n) {
    ComplexVector v(n);
    for (int i = 0; i < n; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      v(i) = Complex(re, im);
    }
    return v;
  };
  ComplexMatrix coeffs = ComplexMatrix::Zero(d_a, d_b);
  for (int t = 0; t < rank; ++t) coeffs += draw(d_a) * draw(d_b).transpose();
  ComplexVector amps(d_a * d_b);
  for (int i = 0; i < d_a; ++i) {
    for (int j = 0; j < d_b; ++j) amps(i * d_b + j) = coeffs(i, j);
  }
  return PureState::normalized({d_a, d_b}, std::move(amps));
}

Eigen::Matrix3cd coefficient_matrix(const PureState& state) {
  if (state.dims() != std::vector<int>{3, 3}) throw ValidationError("expected a two-qutrit state (dims [3,3])");
  Eigen::Matrix3cd a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a(i, j) = state.amplitudes()(3 * i + j);
  }
  return a;
}

PureState from_coefficient_matrix(const Eigen::Matrix3cd& a) {
  ComplexVector amps(9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) amps(3 * i + j) = a(i, j);
  }
  return PureState({3, 3}, std::move(amps));
}

}  // namespace wedge
