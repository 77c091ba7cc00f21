#pragma once

#include <vector>

#include "ptspec/adjoint.hpp"
#include "ptspec/gaussian.hpp"

namespace ptspec {

// Exact coefficients c_0..c_N of det(lambda I - M), ascending, c_N = 1.
struct CharacteristicPolynomial {
  std::vector<GaussianRational> lambda_coeffs;

  std::size_t degree() const { return lambda_coeffs.size() - 1; }
};

// Faddeev-LeVerrier recurrence in exact arithmetic; always monic.
CharacteristicPolynomial characteristic_polynomial(const AdjointMatrix& m);

// Coefficients of the degree-(N/2) polynomial in xi = lambda^2, ascending:
// xi^j picks up the lambda^(2j) coefficient. Throws OddTermError (reporting
// the largest offending index) if any odd lambda coefficient is nonzero.
std::vector<GaussianRational> reduce_to_xi(const CharacteristicPolynomial& p);

}  // namespace ptspec
