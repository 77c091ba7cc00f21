#include <doctest.h>

#include <random>

#include "ptspec/errors.hpp"
#include "ptspec/polynomial.hpp"

using namespace ptspec;

namespace {

Monomial mono(const PhaseSpace& ps, std::initializer_list<std::size_t> factors) {
  Monomial m(ps.dim());
  for (auto f : factors) ++m.exponents[f];
  return m;
}

// product of a word of basis operators in the given order
CanonicalPolynomial word_product(const PhaseSpacePtr& ps, const std::vector<std::size_t>& word) {
  CanonicalPolynomial acc = CanonicalPolynomial::scalar(ps, GaussianRational(1));
  for (auto idx : word) acc = multiply(acc, CanonicalPolynomial::basis_op(ps, idx));
  return acc;
}

// same word evaluated with a random parenthesization
CanonicalPolynomial word_product_random_split(const PhaseSpacePtr& ps,
                                              const std::vector<std::size_t>& word,
                                              std::mt19937& rng) {
  if (word.size() == 1) return CanonicalPolynomial::basis_op(ps, word[0]);
  std::uniform_int_distribution<std::size_t> dist(1, word.size() - 1);
  const std::size_t cut = dist(rng);
  std::vector<std::size_t> left(word.begin(), word.begin() + cut);
  std::vector<std::size_t> right(word.begin() + cut, word.end());
  return multiply(word_product_random_split(ps, left, rng),
                  word_product_random_split(ps, right, rng));
}

GaussianRational random_gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

CanonicalPolynomial random_quadratic(const PhaseSpacePtr& ps, std::mt19937& rng) {
  CanonicalPolynomial h(ps);
  std::uniform_int_distribution<std::size_t> op(0, ps->dim() - 1);
  for (int t = 0; t < 6; ++t) {
    Monomial m(ps->dim());
    ++m.exponents[op(rng)];
    ++m.exponents[op(rng)];
    h.add_term(m, random_gaussian(rng));
  }
  h.add_term(Monomial(ps->dim()), random_gaussian(rng));  // scalar
  return h;
}

}  // namespace

TEST_CASE("multiply produces normal-ordered canonical forms") {
  auto ps = PhaseSpace::single();
  auto q = CanonicalPolynomial::basis_op(ps, 0);
  auto p = CanonicalPolynomial::basis_op(ps, 1);

  SUBCASE("q*p is already normal ordered") {
    auto qp = multiply(q, p);
    CHECK(qp.terms().size() == 1);
    CHECK(qp.coefficient(mono(*ps, {0, 1})) == GaussianRational(1));
  }

  SUBCASE("p*q = qp - i") {
    auto pq = multiply(p, q);
    CHECK(pq.terms().size() == 2);
    CHECK(pq.coefficient(mono(*ps, {0, 1})) == GaussianRational(1));
    CHECK(pq.scalar_part() == -GaussianRational::i());
  }

  SUBCASE("(qp)*q = q^2 p - i q") {
    auto qp = multiply(q, p);
    auto out = multiply(qp, q);
    CHECK(out.coefficient(mono(*ps, {0, 0, 1})) == GaussianRational(1));
    CHECK(out.coefficient(mono(*ps, {0})) == -GaussianRational::i());
    CHECK(out.terms().size() == 2);
  }
}

TEST_CASE("multiply rejects mismatched phase spaces") {
  auto ps1 = PhaseSpace::single();
  auto ps2 = PhaseSpace::single("a", "p_a");
  CHECK_THROWS_AS(multiply(CanonicalPolynomial::basis_op(ps1, 0),
                           CanonicalPolynomial::basis_op(ps2, 0)),
                  StructuralError);
}

TEST_CASE("canonical form is independent of evaluation order") {
  auto ps = PhaseSpace::make({"q1", "q2"}, {"p1", "p2"});
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<std::size_t> op(0, ps->dim() - 1);
  std::uniform_int_distribution<std::size_t> len(2, 6);

  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::size_t> word(len(rng));
    for (auto& w : word) w = op(rng);
    auto reference = word_product(ps, word);
    for (int split = 0; split < 3; ++split) {
      CHECK(word_product_random_split(ps, word, rng) == reference);
    }
  }
}

TEST_CASE("commutator basics") {
  auto ps = PhaseSpace::single();
  auto q = CanonicalPolynomial::basis_op(ps, 0);
  auto p = CanonicalPolynomial::basis_op(ps, 1);

  SUBCASE("[q, p] = i") {
    auto c = commutator(q, p);
    CHECK(c.terms().size() == 1);
    CHECK(c.scalar_part() == GaussianRational::i());
  }

  SUBCASE("[p^2/2, q] = -i p") {
    auto h = multiply(p, p) * GaussianRational(Rational(1, 2));
    auto c = commutator(h, q);
    CHECK(c.terms().size() == 1);
    CHECK(c.coefficient(mono(*ps, {1})) == -GaussianRational::i());
  }
}

TEST_CASE("commutator is antisymmetric and satisfies Jacobi") {
  auto ps = PhaseSpace::make({"q1", "q2"}, {"p1", "p2"});
  std::mt19937 rng(7);

  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_quadratic(ps, rng);
    auto b = random_quadratic(ps, rng);
    auto c = random_quadratic(ps, rng);

    CHECK(commutator(a, b) == -commutator(b, a));

    auto jacobi = commutator(a, commutator(b, c));
    jacobi += commutator(b, commutator(c, a));
    jacobi += commutator(c, commutator(a, b));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("degree and zero bookkeeping") {
  auto ps = PhaseSpace::single();
  auto q = CanonicalPolynomial::basis_op(ps, 0);
  auto zero = CanonicalPolynomial::zero(ps);

  CHECK(zero.is_zero());
  CHECK(zero.degree() == 0);
  CHECK(q.degree() == 1);
  CHECK((q - q).is_zero());
  CHECK(multiply(q, q).degree() == 2);

  auto s = CanonicalPolynomial::scalar(ps, GaussianRational(Rational(3, 4)));
  CHECK(s.degree() == 0);
  CHECK(multiply(s, q) == q * GaussianRational(Rational(3, 4)));
}
