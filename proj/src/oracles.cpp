#include "wedge/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "wedge/error.hpp"

namespace wedge::oracles {

double eg_expanded(Complex a, Complex b, Complex c, Complex p, Complex q, Complex r, Complex x, Complex y,
                   Complex z) {
  const double volume = std::norm(a * (q * z - r * y) - b * (p * z - r * x) + c * (p * y - q * x));
  const double rows01 = std::norm(b * r - c * q) + std::norm(c * p - a * r) + std::norm(a * q - b * p);
  const double rows02 = std::norm(b * z - c * y) + std::norm(c * x - a * z) + std::norm(a * y - b * x);
  const double rows12 = std::norm(q * z - r * y) + std::norm(x * r - p * z) + std::norm(p * y - q * x);
  return 9.0 * volume + 2.0 * (rows01 + rows02 + rows12);
}

double eg_expanded(const Eigen::Matrix3cd& m) {
  return eg_expanded(m(0, 0), m(0, 1), m(0, 2), m(1, 0), m(1, 1), m(1, 2), m(2, 0), m(2, 1), m(2, 2));
}

Complex leibniz_determinant(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("leibniz_determinant: matrix must be square");
  const auto n = static_cast<int>(m.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total{};
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Complex term = (inversions % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace wedge::oracles
