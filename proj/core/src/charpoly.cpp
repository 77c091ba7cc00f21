#include "ptspec/charpoly.hpp"

#include "ptspec/errors.hpp"

namespace ptspec {

CharacteristicPolynomial characteristic_polynomial(const AdjointMatrix& m) {
  const std::size_t n = m.entries.size();
  std::vector<GaussianRational> c(n + 1);
  c[n] = GaussianRational(1);

  // M_1 = M, c_{N-1} = -tr M_1; M_k = M (M_{k-1} + c_{N-k+1} I), c_{N-k} = -tr(M_k)/k
  ExactMatrix mk = m.entries;
  c[n - 1] = -mk.trace();
  for (std::size_t k = 2; k <= n; ++k) {
    mk.add_to_diagonal(c[n - k + 1]);
    mk = m.entries * mk;
    c[n - k] = -(mk.trace() / GaussianRational(Rational(static_cast<long>(k))));
  }
  return {std::move(c)};
}

std::vector<GaussianRational> reduce_to_xi(const CharacteristicPolynomial& p) {
  const auto& c = p.lambda_coeffs;
  std::size_t worst = 0;
  bool odd_found = false;
  for (std::size_t i = 1; i < c.size(); i += 2) {
    if (!c[i].is_zero()) {
      worst = i;
      odd_found = true;
    }
  }
  if (odd_found)
    throw OddTermError(worst, "characteristic polynomial has a nonzero odd coefficient at index " +
                                  std::to_string(worst) + "; spectrum is not even in lambda");

  std::vector<GaussianRational> xi;
  xi.reserve(c.size() / 2 + 1);
  for (std::size_t i = 0; i < c.size(); i += 2) xi.push_back(c[i]);
  return xi;
}

}  // namespace ptspec
