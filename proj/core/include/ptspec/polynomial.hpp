#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ptspec/gaussian.hpp"
#include "ptspec/phase_space.hpp"

namespace ptspec {

// Exponent vector over the basis (q_1..q_n, p_1..p_n), read in normal order:
// all coordinate factors stand left of all momentum factors.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  explicit Monomial(std::size_t dim) : exponents(dim, 0) {}
  Monomial() = default;

  std::size_t degree() const {
    std::size_t d = 0;
    for (auto e : exponents) d += e;
    return d;
  }
  bool is_scalar() const { return degree() == 0; }

  auto operator<=>(const Monomial&) const = default;
};

// Operator polynomial in canonical form: a map from normal-ordered monomials
// to nonzero exact coefficients. Two operator expressions equal under
// [q, p_q] = i have identical term maps. Immutable by convention once built.
class CanonicalPolynomial {
 public:
  using TermMap = std::map<Monomial, GaussianRational>;

  explicit CanonicalPolynomial(PhaseSpacePtr space);

  static CanonicalPolynomial zero(PhaseSpacePtr space) { return CanonicalPolynomial(std::move(space)); }
  static CanonicalPolynomial scalar(PhaseSpacePtr space, GaussianRational value);
  static CanonicalPolynomial basis_op(PhaseSpacePtr space, std::size_t index);

  const PhaseSpace& space() const { return *space_; }
  const PhaseSpacePtr& space_ptr() const { return space_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;

  GaussianRational coefficient(const Monomial& m) const;
  GaussianRational scalar_part() const;

  // Accumulates; drops the entry when the sum cancels to zero.
  void add_term(const Monomial& m, const GaussianRational& c);

  CanonicalPolynomial& operator+=(const CanonicalPolynomial& o);
  CanonicalPolynomial& operator-=(const CanonicalPolynomial& o);
  CanonicalPolynomial& operator*=(const GaussianRational& s);

  friend CanonicalPolynomial operator+(CanonicalPolynomial a, const CanonicalPolynomial& b) {
    return a += b;
  }
  friend CanonicalPolynomial operator-(CanonicalPolynomial a, const CanonicalPolynomial& b) {
    return a -= b;
  }
  friend CanonicalPolynomial operator*(CanonicalPolynomial a, const GaussianRational& s) {
    return a *= s;
  }
  friend CanonicalPolynomial operator*(const GaussianRational& s, CanonicalPolynomial a) {
    return a *= s;
  }
  friend CanonicalPolynomial operator-(const CanonicalPolynomial& a);

  bool operator==(const CanonicalPolynomial& o) const;

  // Rendering for messages and debugging, e.g. "(-1/2)*z*w + (1/2)*x^2".
  std::string str() const;
  std::string monomial_str(const Monomial& m) const;

 private:
  PhaseSpacePtr space_;
  TermMap terms_;
};

// Normal-ordered operator product; the canonical form of a*b under
// [q, p_q] = i. Bilinear in both arguments.
CanonicalPolynomial multiply(const CanonicalPolynomial& a, const CanonicalPolynomial& b);

inline CanonicalPolynomial operator*(const CanonicalPolynomial& a, const CanonicalPolynomial& b) {
  return multiply(a, b);
}

// multiply(a,b) - multiply(b,a).
CanonicalPolynomial commutator(const CanonicalPolynomial& a, const CanonicalPolynomial& b);

}  // namespace ptspec
