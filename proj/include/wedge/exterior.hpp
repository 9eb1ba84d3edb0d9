#pragma once

// Squared norms of wedge products of complex vectors.
//
// |v_1 ^ ... ^ v_k|^2 is the squared k-volume of the parallelepiped spanned by
// the v_i, which equals the determinant of their Gram matrix
// G_ij = <v_i, v_j>. Inner products are conjugate-linear in the first slot.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace wedge {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

namespace exterior {

// Round-off window below zero that is clamped to 0; anything more negative is
// reported as a ConsistencyError.
inline constexpr double kNegativeClamp = 1e-10;

// <u, v> = sum_i conj(u_i) v_i.
Complex inner(const ComplexVector& u, const ComplexVector& v);

// G_ij = <v_i, v_j>. Throws ValidationError on mixed dimensions.
ComplexMatrix gram_matrix(std::span<const ComplexVector> vectors);

// det(Gram) of 1 <= k <= d vectors in C^d. When k == d the value is |det A|^2
// with A the stacked vectors; both paths agree to round-off.
double wedge_norm_sq(std::span<const ComplexVector> vectors);

// |det A|^2 for exactly d vectors in C^d, A having the vectors as rows.
double wedge_norm_sq_square(std::span<const ComplexVector> vectors);

// sum_{i<j} |v_i ^ v_j|^2 via Lagrange's identity |v_i|^2 |v_j|^2 - |<v_i,v_j>|^2.
double pairwise_wedge_sum(std::span<const ComplexVector> vectors);

// Entry k (2 <= k <= max_order) holds sum over k-subsets S of |^S|^2.
// Entries 0 and 1 are unused and set to 0; orders above the ambient dimension
// are identically 0. Enumerates subsets directly.
std::vector<double> order_sums(std::span<const ComplexVector> vectors, int max_order);

// Same quantity via Cauchy-Binet: the sum of all k x k principal minors of
// the Gram matrix is the k-th elementary symmetric polynomial of its
// eigenvalues. Cost does not grow with the number of subsets.
std::vector<double> order_sums_spectral(std::span<const ComplexVector> vectors, int max_order);

// Number of k-subsets of n items, saturating at the double range.
double binomial(int n, int k);

}  // namespace exterior
}  // namespace wedge
