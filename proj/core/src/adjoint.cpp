#include "ptspec/adjoint.hpp"

#include <cassert>

#include "ptspec/errors.hpp"

namespace ptspec {

namespace {

// Splits H into scalar + quadratic, rejecting degree > 2 and degree 1.
void check_quadratic_no_linear(const CanonicalPolynomial& h) {
  for (const auto& [m, c] : h.terms()) {
    const std::size_t d = m.degree();
    if (d > 2)
      throw NotQuadraticError(h.monomial_str(m),
                              "Hamiltonian is not quadratic: monomial '" + h.monomial_str(m) +
                                  "' has degree " + std::to_string(d));
    if (d == 1)
      throw LinearTermError(h.monomial_str(m),
                            "Hamiltonian has an unsupported linear term '" + h.monomial_str(m) +
                                "'; the commutator with the basis would not close on it");
  }
}

}  // namespace

AdjointMatrix adjoint_matrix(const CanonicalPolynomial& h) {
  check_quadratic_no_linear(h);
  const PhaseSpace& ps = h.space();
  const std::size_t dim = ps.dim();
  ExactMatrix m(dim);

  for (std::size_t i = 0; i < dim; ++i) {
    CanonicalPolynomial c = commutator(h, CanonicalPolynomial::basis_op(h.space_ptr(), i));
    for (const auto& [mono, coeff] : c.terms()) {
      // [quadratic, basis op] is homogeneous of degree 1
      assert(mono.degree() == 1);
      std::size_t j = 0;
      while (mono.exponents[j] == 0) ++j;
      m(j, i) = coeff;
    }
  }
  return {h.space_ptr(), std::move(m)};
}

SymmetricCoefficientMatrix symmetrized_coefficients(const CanonicalPolynomial& h) {
  const PhaseSpace& ps = h.space();
  ExactMatrix s(ps.dim());
  for (const auto& [m, c] : h.terms()) {
    const std::size_t d = m.degree();
    if (d > 2)
      throw NotQuadraticError(h.monomial_str(m),
                              "not quadratic: monomial '" + h.monomial_str(m) + "'");
    if (d != 2) continue;  // scalars and linear terms carry no quadratic data

    std::size_t first = 0;
    while (m.exponents[first] == 0) ++first;
    if (m.exponents[first] == 2) {
      // 1/2 S_aa O_a^2  =>  S_aa = 2c
      s(first, first) += GaussianRational(2) * c;
    } else {
      std::size_t second = first + 1;
      while (m.exponents[second] == 0) ++second;
      // cross term: 1/2 (S_ab + S_ba) O_a O_b  =>  S_ab = S_ba = c
      s(first, second) += c;
      s(second, first) += c;
    }
  }
  return {h.space_ptr(), std::move(s)};
}

bool is_formally_symmetric(const CanonicalPolynomial& h) {
  SymmetricCoefficientMatrix s = symmetrized_coefficients(h);
  const std::size_t dim = h.space().dim();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (!s.entries(i, j).is_real()) return false;
  for (const auto& [m, c] : h.terms()) {
    if (m.degree() <= 1 && !c.is_real()) return false;
  }
  return true;
}

}  // namespace ptspec
