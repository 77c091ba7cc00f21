#include "ptspec/polynomial.hpp"

#include <utility>

#include "ptspec/errors.hpp"

namespace ptspec {

namespace {

void require_same_space(const CanonicalPolynomial& a, const CanonicalPolynomial& b) {
  if (a.space() != b.space())
    throw StructuralError("operands live in different phase spaces");
}

// (-i)^j
GaussianRational minus_i_power(std::uint32_t j) {
  switch (j % 4) {
    case 0: return GaussianRational(1);
    case 1: return {Rational(0), Rational(-1)};
    case 2: return GaussianRational(-1);
    default: return {Rational(0), Rational(1)};
  }
}

// j! * C(s,j) * C(t,j), the number of ways to contract j momentum factors
// against j coordinate factors of the same pair.
mpz_class contraction_count(std::uint32_t s, std::uint32_t t, std::uint32_t j) {
  mpz_class b1, b2, f;
  mpz_bin_uiui(b1.get_mpz_t(), s, j);
  mpz_bin_uiui(b2.get_mpz_t(), t, j);
  mpz_fac_ui(f.get_mpz_t(), j);
  return b1 * b2 * f;
}

}  // namespace

CanonicalPolynomial::CanonicalPolynomial(PhaseSpacePtr space) : space_(std::move(space)) {
  if (!space_) throw StructuralError("null phase space");
}

CanonicalPolynomial CanonicalPolynomial::scalar(PhaseSpacePtr space, GaussianRational value) {
  CanonicalPolynomial p(std::move(space));
  if (!value.is_zero()) p.terms_.emplace(Monomial(p.space().dim()), std::move(value));
  return p;
}

CanonicalPolynomial CanonicalPolynomial::basis_op(PhaseSpacePtr space, std::size_t index) {
  CanonicalPolynomial p(std::move(space));
  if (index >= p.space().dim()) throw StructuralError("basis index out of range");
  Monomial m(p.space().dim());
  m.exponents[index] = 1;
  p.terms_.emplace(std::move(m), GaussianRational(1));
  return p;
}

std::size_t CanonicalPolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

GaussianRational CanonicalPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational CanonicalPolynomial::scalar_part() const {
  return coefficient(Monomial(space().dim()));
}

void CanonicalPolynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CanonicalPolynomial& CanonicalPolynomial::operator+=(const CanonicalPolynomial& o) {
  require_same_space(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CanonicalPolynomial& CanonicalPolynomial::operator-=(const CanonicalPolynomial& o) {
  require_same_space(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CanonicalPolynomial& CanonicalPolynomial::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

CanonicalPolynomial operator-(const CanonicalPolynomial& a) {
  CanonicalPolynomial r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool CanonicalPolynomial::operator==(const CanonicalPolynomial& o) const {
  return *space_ == *o.space_ && terms_ == o.terms_;
}

std::string CanonicalPolynomial::monomial_str(const Monomial& m) const {
  if (m.is_scalar()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += space().name(i);
    if (m.exponents[i] > 1) s += "^" + std::to_string(m.exponents[i]);
  }
  return s;
}

std::string CanonicalPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    if (!m.is_scalar()) s += "*" + monomial_str(m);
  }
  return s;
}

namespace {

// Normal-ordered expansion of the monomial product (q^a p^b)(q^g p^d).
// Per pair, p^s q^t = sum_j (-i)^j j! C(s,j) C(t,j) q^(t-j) p^(s-j); pairs
// contract independently, so the expansion is a product over pairs.
void expand_monomial_product(const PhaseSpace& ps, const Monomial& lhs, const Monomial& rhs,
                             const GaussianRational& scale, CanonicalPolynomial& out) {
  const std::size_t n = ps.pairs();

  std::vector<std::size_t> active;  // pairs with contractions available
  for (std::size_t a = 0; a < n; ++a) {
    if (lhs.exponents[n + a] > 0 && rhs.exponents[a] > 0) active.push_back(a);
  }

  Monomial base(ps.dim());
  for (std::size_t i = 0; i < ps.dim(); ++i)
    base.exponents[i] = lhs.exponents[i] + rhs.exponents[i];

  if (active.empty()) {
    out.add_term(base, scale);
    return;
  }

  std::vector<std::uint32_t> js(active.size(), 0);
  Monomial mono = base;
  while (true) {
    GaussianRational coeff = scale;
    std::uint32_t total_j = 0;
    mono = base;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const std::size_t a = active[k];
      const std::uint32_t j = js[k];
      if (j > 0) {
        total_j += j;
        coeff *= GaussianRational(Rational(contraction_count(lhs.exponents[n + a],
                                                             rhs.exponents[a], j)));
        mono.exponents[a] -= j;
        mono.exponents[n + a] -= j;
      }
    }
    coeff *= minus_i_power(total_j);
    out.add_term(mono, coeff);

    // next multi-index
    std::size_t k = 0;
    for (; k < active.size(); ++k) {
      const std::size_t a = active[k];
      const std::uint32_t jmax = std::min(lhs.exponents[n + a], rhs.exponents[a]);
      if (js[k] < jmax) {
        ++js[k];
        break;
      }
      js[k] = 0;
    }
    if (k == active.size()) break;
  }
}

}  // namespace

CanonicalPolynomial multiply(const CanonicalPolynomial& a, const CanonicalPolynomial& b) {
  require_same_space(a, b);
  CanonicalPolynomial out(a.space_ptr());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      expand_monomial_product(a.space(), ma, mb, ca * cb, out);
    }
  }
  return out;
}

CanonicalPolynomial commutator(const CanonicalPolynomial& a, const CanonicalPolynomial& b) {
  CanonicalPolynomial r = multiply(a, b);
  r -= multiply(b, a);
  return r;
}

}  // namespace ptspec
