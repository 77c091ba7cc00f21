#include <doctest.h>

#include <random>

#include "ptspec/adjoint.hpp"
#include "ptspec/errors.hpp"
#include "ptspec/symmetry.hpp"

using namespace ptspec;

namespace {

Monomial mono(const PhaseSpace& ps, std::initializer_list<std::size_t> factors) {
  Monomial m(ps.dim());
  for (auto f : factors) ++m.exponents[f];
  return m;
}

// independent route: M = i S J assembled from the coefficient read-off
ExactMatrix i_s_j(const SymmetricCoefficientMatrix& s) {
  const PhaseSpace& ps = *s.space;
  const std::size_t dim = ps.dim();
  ExactMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      GaussianRational acc;
      for (std::size_t k = 0; k < dim; ++k) {
        const int jkj = ps.symplectic(k, j);
        if (jkj == 0) continue;
        acc += jkj > 0 ? s.entries(i, k) : -s.entries(i, k);
      }
      out(i, j) = GaussianRational::i() * acc;
    }
  }
  return out;
}

GaussianRational random_gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
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

PhaseSpacePtr space_of_pairs(std::size_t n) {
  std::vector<std::string> qs, ps;
  for (std::size_t i = 0; i < n; ++i) {
    qs.push_back("q" + std::to_string(i + 1));
    ps.push_back("p" + std::to_string(i + 1));
  }
  return PhaseSpace::make(qs, ps);
}

}  // namespace

TEST_CASE("oscillator adjoint matrix") {
  auto ps = PhaseSpace::single();
  auto q = CanonicalPolynomial::basis_op(ps, 0);
  auto p = CanonicalPolynomial::basis_op(ps, 1);
  auto h = (multiply(p, p) + multiply(q, q)) * GaussianRational(Rational(1, 2));

  auto adj = adjoint_matrix(h);
  CHECK(adj.entries(0, 0) == GaussianRational(0));
  CHECK(adj.entries(0, 1) == GaussianRational::i());
  CHECK(adj.entries(1, 0) == -GaussianRational::i());
  CHECK(adj.entries(1, 1) == GaussianRational(0));
}

TEST_CASE("adjoint matrix rejects cubic and linear Hamiltonians") {
  auto ps = PhaseSpace::single();
  auto q = CanonicalPolynomial::basis_op(ps, 0);
  auto p = CanonicalPolynomial::basis_op(ps, 1);

  auto cubic = multiply(multiply(q, q), q);
  CHECK_THROWS_AS(adjoint_matrix(cubic), NotQuadraticError);
  try {
    adjoint_matrix(cubic);
  } catch (const NotQuadraticError& e) {
    CHECK(e.monomial() == "q^3");
  }

  auto linear = multiply(p, p) + q;
  CHECK_THROWS_AS(adjoint_matrix(linear), LinearTermError);
}

TEST_CASE("additive scalars are ignored by the adjoint construction") {
  auto ps = PhaseSpace::single();
  auto q = CanonicalPolynomial::basis_op(ps, 0);
  auto p = CanonicalPolynomial::basis_op(ps, 1);
  auto h = (multiply(p, p) + multiply(q, q)) * GaussianRational(Rational(1, 2));
  auto shifted = h + CanonicalPolynomial::scalar(ps, GaussianRational(Rational(17, 3)));

  CHECK(adjoint_matrix(shifted).entries == adjoint_matrix(h).entries);
}

TEST_CASE("symmetrized coefficients read off the quadratic part") {
  auto ps = PhaseSpace::make({"x", "y"}, {"p_x", "p_y"});
  auto x = CanonicalPolynomial::basis_op(ps, 0);
  auto y = CanonicalPolynomial::basis_op(ps, 1);

  SUBCASE("cross term k x y") {
    auto h = multiply(x, y) * GaussianRational(Rational(5, 3));
    auto s = symmetrized_coefficients(h);
    CHECK(s.entries(0, 1) == GaussianRational(Rational(5, 3)));
    CHECK(s.entries(1, 0) == GaussianRational(Rational(5, 3)));
    CHECK(s.entries(0, 0) == GaussianRational(0));
  }

  SUBCASE("diagonal term A x^2 / 2") {
    auto h = multiply(x, x) * GaussianRational(Rational(7, 2));
    auto s = symmetrized_coefficients(h);
    CHECK(s.entries(0, 0) == GaussianRational(7));
  }

  SUBCASE("conjugate pair q p: S_qp = 1, reconstruction differs by -i/2") {
    auto q1 = CanonicalPolynomial::basis_op(ps, 0);
    auto p1 = CanonicalPolynomial::basis_op(ps, 2);
    auto h = multiply(q1, p1);
    auto s = symmetrized_coefficients(h);
    CHECK(s.entries(0, 2) == GaussianRational(1));
    CHECK(s.entries(2, 0) == GaussianRational(1));
    // 1/2 (S_qp q p + S_pq p q) = qp - i/2
    auto rebuilt = (multiply(q1, p1) + multiply(p1, q1)) * GaussianRational(Rational(1, 2));
    CHECK(rebuilt.coefficient(mono(*ps, {0, 2})) == GaussianRational(1));
    CHECK(rebuilt.scalar_part() == GaussianRational(Rational(0), Rational(-1, 2)));
  }
}

TEST_CASE("adjoint equals i S J for random purely quadratic Hamiltonians") {
  std::mt19937 rng(991);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto ps = space_of_pairs(n);
    for (int trial = 0; trial < 8; ++trial) {
      auto h = random_pure_quadratic(ps, rng);
      auto adj = adjoint_matrix(h);
      CHECK(adj.entries == i_s_j(symmetrized_coefficients(h)));
      CHECK(adj.entries.trace() == GaussianRational(0));
    }
  }
}

TEST_CASE("formal symmetry forces purely imaginary adjoint entries") {
  std::mt19937 rng(1234);
  auto ps = space_of_pairs(3);
  for (int trial = 0; trial < 10; ++trial) {
    CanonicalPolynomial h(ps);
    for (const auto& [m, c] : random_pure_quadratic(ps, rng).terms())
      h.add_term(m, GaussianRational(c.re));
    REQUIRE(is_formally_symmetric(h));
    auto adj = adjoint_matrix(h);
    for (std::size_t i = 0; i < ps->dim(); ++i)
      for (std::size_t j = 0; j < ps->dim(); ++j) CHECK(adj.entries(i, j).re == 0);
  }
}

TEST_CASE("is_formally_symmetric") {
  auto ps = PhaseSpace::single();
  auto q = CanonicalPolynomial::basis_op(ps, 0);
  auto p = CanonicalPolynomial::basis_op(ps, 1);

  CHECK(is_formally_symmetric((multiply(p, p) + multiply(q, q)) *
                              GaussianRational(Rational(1, 2))));
  CHECK_FALSE(is_formally_symmetric(multiply(q, p) * GaussianRational::i()));
  CHECK(is_formally_symmetric(CanonicalPolynomial::zero(ps)));
  CHECK_FALSE(is_formally_symmetric(q * GaussianRational::i()));
}

TEST_CASE("check_linear_symmetry") {
  auto ps = PhaseSpace::single();
  auto q = CanonicalPolynomial::basis_op(ps, 0);
  auto p = CanonicalPolynomial::basis_op(ps, 1);
  auto h = (multiply(p, p) + multiply(q, q)) * GaussianRational(Rational(1, 2));

  SUBCASE("even polynomial under full sign flip") {
    SignedBasisMap flip = SignedBasisMap::identity(2);
    flip.images[0].sign = -1;
    flip.images[1].sign = -1;
    CHECK(check_linear_symmetry(h, flip, false));
  }

  SUBCASE("swap of commuting coordinates") {
    auto ps2 = PhaseSpace::make({"x", "y"}, {"p_x", "p_y"});
    auto x = CanonicalPolynomial::basis_op(ps2, 0);
    auto y = CanonicalPolynomial::basis_op(ps2, 1);
    auto hxy = multiply(x, y) * GaussianRational(Rational(2, 7));
    SignedBasisMap swap = SignedBasisMap::identity(4);
    swap.images[0].target = 1;
    swap.images[1].target = 0;
    swap.images[2].target = 3;
    swap.images[3].target = 2;
    CHECK(check_linear_symmetry(hxy, swap, false));
  }

  SUBCASE("exchange q<->p needs re-normal-ordering and still matches") {
    // H = qp - i/2 = (qp + pq)/2 is invariant under q->p, p->q with conjugation
    auto hsym = multiply(q, p) +
                CanonicalPolynomial::scalar(ps, GaussianRational(Rational(0), Rational(-1, 2)));
    SignedBasisMap ex = SignedBasisMap::identity(2);
    ex.images[0].target = 1;
    ex.images[1].target = 0;
    CHECK(check_linear_symmetry(hsym, ex, true));
    CHECK_FALSE(check_linear_symmetry(multiply(q, p), ex, false));
  }

  SUBCASE("map must be a signed permutation") {
    SignedBasisMap broken = SignedBasisMap::identity(2);
    broken.images[1].target = 0;
    CHECK_THROWS_AS(check_linear_symmetry(h, broken, false), StructuralError);
    SignedBasisMap badsign = SignedBasisMap::identity(2);
    badsign.images[0].sign = 2;
    CHECK_THROWS_AS(check_linear_symmetry(h, badsign, false), StructuralError);
  }
}
