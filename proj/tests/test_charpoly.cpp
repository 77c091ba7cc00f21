#include <doctest.h>

#include <random>

#include "ptspec/adjoint.hpp"
#include "ptspec/charpoly.hpp"
#include "ptspec/errors.hpp"

using namespace ptspec;

namespace {

using Poly = std::vector<GaussianRational>;  // ascending in lambda

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Leibniz-formula determinant of (lambda I - M); independent of the
// Faddeev-LeVerrier recurrence. Fine for small sizes.
Poly cofactor_charpoly(const ExactMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  Poly acc(n + 1);
  do {
    // permutation sign by counting inversions
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;

    Poly prod{GaussianRational(sign)};
    for (std::size_t i = 0; i < n; ++i) {
      Poly entry;  // (lambda I - M)(i, perm[i])
      if (i == perm[i])
        entry = {-m(i, perm[i]), GaussianRational(1)};
      else
        entry = {-m(i, perm[i])};
      prod = poly_mul(prod, entry);
    }
    for (std::size_t d = 0; d < prod.size(); ++d) acc[d] += prod[d];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

GaussianRational random_gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

PhaseSpacePtr space_of_pairs(std::size_t n) {
  std::vector<std::string> qs, ps;
  for (std::size_t i = 0; i < n; ++i) {
    qs.push_back("q" + std::to_string(i + 1));
    ps.push_back("p" + std::to_string(i + 1));
  }
  return PhaseSpace::make(qs, ps);
}

CanonicalPolynomial random_pure_quadratic(const PhaseSpacePtr& ps, std::mt19937& rng) {
  CanonicalPolynomial h(ps);
  std::uniform_int_distribution<std::size_t> op(0, ps->dim() - 1);
  for (int t = 0; t < 8; ++t) {
    Monomial m(ps->dim());
    ++m.exponents[op(rng)];
    ++m.exponents[op(rng)];
    h.add_term(m, random_gaussian(rng));
  }
  return h;
}

}  // namespace

TEST_CASE("2x2 oscillator characteristic polynomial is lambda^2 - 1") {
  auto ps = PhaseSpace::single();
  ExactMatrix m(2);
  m(0, 1) = GaussianRational::i();
  m(1, 0) = -GaussianRational::i();
  auto cp = characteristic_polynomial({ps, m});

  REQUIRE(cp.lambda_coeffs.size() == 3);
  CHECK(cp.lambda_coeffs[0] == GaussianRational(-1));
  CHECK(cp.lambda_coeffs[1] == GaussianRational(0));
  CHECK(cp.lambda_coeffs[2] == GaussianRational(1));
}

TEST_CASE("Faddeev-LeVerrier agrees with the cofactor expansion") {
  std::mt19937 rng(5150);
  auto ps = space_of_pairs(2);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      ExactMatrix m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_gaussian(rng);
      auto cp = characteristic_polynomial({ps, m});
      auto oracle = cofactor_charpoly(m);
      REQUIRE(cp.lambda_coeffs.size() == oracle.size());
      for (std::size_t d = 0; d < oracle.size(); ++d) CHECK(cp.lambda_coeffs[d] == oracle[d]);
    }
  }
}

TEST_CASE("quadratic-Hamiltonian adjoints have even characteristic polynomials") {
  std::mt19937 rng(77);
  auto ps = space_of_pairs(3);  // 6x6 adjoint
  for (int trial = 0; trial < 10; ++trial) {
    auto h = random_pure_quadratic(ps, rng);
    auto cp = characteristic_polynomial(adjoint_matrix(h));
    REQUIRE(cp.lambda_coeffs.size() == 7);
    CHECK(cp.lambda_coeffs[6] == GaussianRational(1));  // monic
    for (std::size_t i = 1; i < cp.lambda_coeffs.size(); i += 2)
      CHECK(cp.lambda_coeffs[i] == GaussianRational(0));
  }
}

TEST_CASE("reduce_to_xi") {
  SUBCASE("lambda^2 - 1 becomes xi - 1") {
    CharacteristicPolynomial cp{{GaussianRational(-1), GaussianRational(0), GaussianRational(1)}};
    auto xi = reduce_to_xi(cp);
    REQUIRE(xi.size() == 2);
    CHECK(xi[0] == GaussianRational(-1));
    CHECK(xi[1] == GaussianRational(1));
  }

  SUBCASE("odd coefficient raises OddTermError with the largest offending index") {
    CharacteristicPolynomial cp{{GaussianRational(0), GaussianRational(2), GaussianRational(0),
                                 GaussianRational(1)}};  // 2 lambda + lambda^3
    CHECK_THROWS_AS(reduce_to_xi(cp), OddTermError);
    try {
      reduce_to_xi(cp);
    } catch (const OddTermError& e) {
      CHECK(e.index() == 3);
    }
  }
}
