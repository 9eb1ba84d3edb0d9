#include "wedge/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wedge/error.hpp"

namespace wedge::exterior {
namespace {

Eigen::Index common_dim(std::span<const ComplexVector> vectors) {
  if (vectors.empty()) throw ValidationError("wedge: empty vector family");
  const Eigen::Index d = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != d) throw ValidationError("wedge: mixed dimensions");
  }
  if (d == 0) throw ValidationError("wedge: zero-dimensional vectors");
  return d;
}

double clamp_nonnegative(double value, const char* what) {
  if (value >= 0.0) return value;
  if (value >= -kNegativeClamp) return 0.0;
  std::ostringstream msg;
  msg << what << ": negative squared volume " << value << " beyond round-off";
  throw ConsistencyError(msg.str());
}

}  // namespace

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) throw ValidationError("inner: mixed dimensions");
  return u.dot(v);  // Eigen's dot conjugates its first argument.
}

ComplexMatrix gram_matrix(std::span<const ComplexVector> vectors) {
  common_dim(vectors);
  const auto k = static_cast<Eigen::Index>(vectors.size());
  ComplexMatrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    g(i, i) = vectors[i].squaredNorm();
    for (Eigen::Index j = i + 1; j < k; ++j) {
      g(i, j) = vectors[i].dot(vectors[j]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

double wedge_norm_sq(std::span<const ComplexVector> vectors) {
  const Eigen::Index d = common_dim(vectors);
  if (static_cast<Eigen::Index>(vectors.size()) > d) {
    throw ValidationError("wedge: too many vectors for ambient dimension");
  }
  if (vectors.size() == 1) return vectors.front().squaredNorm();
  const ComplexMatrix g = gram_matrix(vectors);
  // Hermitian, so the determinant is real up to round-off.
  return clamp_nonnegative(g.partialPivLu().determinant().real(), "wedge_norm_sq");
}

double wedge_norm_sq_square(std::span<const ComplexVector> vectors) {
  const Eigen::Index d = common_dim(vectors);
  if (static_cast<Eigen::Index>(vectors.size()) != d) {
    throw ValidationError("wedge: square path needs exactly d vectors in C^d");
  }
  ComplexMatrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) a.row(i) = vectors[i].transpose();
  return std::norm(a.partialPivLu().determinant());
}

double pairwise_wedge_sum(std::span<const ComplexVector> vectors) {
  if (vectors.size() < 2) throw ValidationError("pairwise_wedge_sum: need at least 2 vectors");
  common_dim(vectors);
  std::vector<double> norms(vectors.size());
  std::transform(vectors.begin(), vectors.end(), norms.begin(),
                 [](const ComplexVector& v) { return v.squaredNorm(); });
  double total = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      const double area = norms[i] * norms[j] - std::norm(vectors[i].dot(vectors[j]));
      total += clamp_nonnegative(area, "pairwise_wedge_sum");
    }
  }
  return total;
}

std::vector<double> order_sums(std::span<const ComplexVector> vectors, int max_order) {
  const Eigen::Index d = common_dim(vectors);
  const int n = static_cast<int>(vectors.size());
  std::vector<double> sums(static_cast<std::size_t>(std::max(max_order, 1)) + 1, 0.0);
  if (max_order >= 2 && n >= 2) sums[2] = pairwise_wedge_sum(vectors);

  std::vector<ComplexVector> subset;
  for (int k = 3; k <= max_order; ++k) {
    if (k > n || k > d) break;
    // Lexicographic walk over k-combinations of {0..n-1}.
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    double total = 0.0;
    while (true) {
      subset.clear();
      for (int i : idx) subset.push_back(vectors[static_cast<std::size_t>(i)]);
      total += wedge_norm_sq(subset);
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < k; ++j) {
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    sums[static_cast<std::size_t>(k)] = total;
  }
  return sums;
}

std::vector<double> order_sums_spectral(std::span<const ComplexVector> vectors, int max_order) {
  const Eigen::Index d = common_dim(vectors);
  const auto n = static_cast<Eigen::Index>(vectors.size());
  // Gram (n x n) and frame operator sum_i v_i v_i^dagger (d x d) share their
  // nonzero spectrum; diagonalize the smaller one.
  ComplexMatrix m;
  if (n <= d) {
    m = gram_matrix(vectors);
  } else {
    m = ComplexMatrix::Zero(d, d);
    for (const auto& v : vectors) m.noalias() += v * v.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConsistencyError("order_sums_spectral: eigensolver failed");

  const auto top = static_cast<std::size_t>(std::max(max_order, 1));
  std::vector<double> e(top + 1, 0.0);
  e[0] = 1.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = std::max(solver.eigenvalues()(i), 0.0);
    for (std::size_t k = top; k >= 1; --k) e[k] += lambda * e[k - 1];
  }
  e[0] = 0.0;
  e[1] = 0.0;
  return e;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace wedge::exterior
