#pragma once

// Reference computations that deliberately avoid the Gram/wedge code paths.
// They exist to cross-check the library, in tests and in `wedge check`.

#include "wedge/exterior.hpp"

namespace wedge::oracles {

// The two-qutrit measure expanded in the nine coefficients of
//   a|00> + b|01> + c|02> + p|10> + q|11> + r|12> + x|20> + y|21> + z|22>:
// nine times the squared determinant plus twice the nine squared 2x2 minors.
double eg_expanded(Complex a, Complex b, Complex c, Complex p, Complex q, Complex r, Complex x, Complex y,
                   Complex z);
double eg_expanded(const Eigen::Matrix3cd& coefficients);

// Determinant as a signed sum over permutations.
Complex leibniz_determinant(const ComplexMatrix& m);

}  // namespace wedge::oracles
