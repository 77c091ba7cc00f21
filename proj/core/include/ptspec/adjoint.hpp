#pragma once

#include "ptspec/matrix.hpp"
#include "ptspec/phase_space.hpp"
#include "ptspec/polynomial.hpp"

namespace ptspec {

// Matrix of commutator coefficients over the operator basis, column
// convention [H, O_i] = sum_j M(j,i) O_j. For a quadratic H with real
// symmetrized coefficients every entry is purely imaginary and the trace
// vanishes (M = i S J with S symmetric, J antisymmetric).
struct AdjointMatrix {
  PhaseSpacePtr space;
  ExactMatrix entries;
};

// Symmetric S with quadratic-part(H) = 1/2 z^T S z over the ordered basis z,
// equal to the quadratic part up to the additive scalar produced by normal
// ordering the q_a p_a cross terms.
struct SymmetricCoefficientMatrix {
  PhaseSpacePtr space;
  ExactMatrix entries;
};

// Builds the adjoint representation by expanding [H, O_i] over the basis.
// Requires degree(H) <= 2 with no degree-1 terms; additive scalars are
// accepted and ignored. Throws NotQuadraticError / LinearTermError naming
// the offending monomial.
AdjointMatrix adjoint_matrix(const CanonicalPolynomial& h);

// Reads the quadratic coefficients directly off the term map; no commutators
// involved, which makes it an independent route to the same matrix through
// M = i S J. Throws NotQuadraticError for degree > 2.
SymmetricCoefficientMatrix symmetrized_coefficients(const CanonicalPolynomial& h);

// True iff H is formally Hermitian: every symmetrized coefficient, every
// degree-1 coefficient and the scalar part are real.
bool is_formally_symmetric(const CanonicalPolynomial& h);

}  // namespace ptspec
