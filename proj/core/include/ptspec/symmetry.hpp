#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ptspec/polynomial.hpp"

namespace ptspec {

// Signed permutation of the basis: O_i -> sign[i] * O_target[i].
struct SignedBasisMap {
  struct Image {
    std::size_t target;
    int sign;  // +1 or -1
  };
  std::vector<Image> images;

  static SignedBasisMap identity(std::size_t dim);
  // Throws StructuralError unless this is a bijection with signs in {-1,+1}.
  void validate(std::size_t dim) const;
};

// True iff substituting the map into every monomial of the canonical form
// (conjugating all coefficients when antilinear) reproduces h exactly.
// Substituted monomials are re-normal-ordered, so maps that exchange
// coordinates and momenta are handled correctly.
bool check_linear_symmetry(const CanonicalPolynomial& h, const SignedBasisMap& map,
                           bool antilinear);

}  // namespace ptspec
