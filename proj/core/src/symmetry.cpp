#include "ptspec/symmetry.hpp"

#include "ptspec/errors.hpp"

namespace ptspec {

SignedBasisMap SignedBasisMap::identity(std::size_t dim) {
  SignedBasisMap m;
  m.images.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) m.images.push_back({i, +1});
  return m;
}

void SignedBasisMap::validate(std::size_t dim) const {
  if (images.size() != dim)
    throw StructuralError("basis map has " + std::to_string(images.size()) +
                          " images, expected " + std::to_string(dim));
  std::vector<bool> hit(dim, false);
  for (const auto& im : images) {
    if (im.target >= dim) throw StructuralError("basis map target out of range");
    if (im.sign != 1 && im.sign != -1)
      throw StructuralError("basis map sign must be +1 or -1");
    if (hit[im.target]) throw StructuralError("basis map is not a permutation");
    hit[im.target] = true;
  }
}

bool check_linear_symmetry(const CanonicalPolynomial& h, const SignedBasisMap& map,
                           bool antilinear) {
  const PhaseSpace& ps = h.space();
  map.validate(ps.dim());

  std::vector<CanonicalPolynomial> image_ops;
  image_ops.reserve(ps.dim());
  for (std::size_t i = 0; i < ps.dim(); ++i) {
    CanonicalPolynomial op = CanonicalPolynomial::basis_op(h.space_ptr(), map.images[i].target);
    if (map.images[i].sign < 0) op *= GaussianRational(-1);
    image_ops.push_back(std::move(op));
  }

  CanonicalPolynomial transformed = CanonicalPolynomial::zero(h.space_ptr());
  for (const auto& [mono, coeff] : h.terms()) {
    CanonicalPolynomial term =
        CanonicalPolynomial::scalar(h.space_ptr(), antilinear ? coeff.conj() : coeff);
    // factors substituted in the monomial's own (normal) order; an
    // antiunitary map preserves operator order, only coefficients conjugate
    for (std::size_t i = 0; i < ps.dim(); ++i)
      for (std::uint32_t r = 0; r < mono.exponents[i]; ++r) term = multiply(term, image_ops[i]);
    transformed += term;
  }
  return transformed == h;
}

}  // namespace ptspec
