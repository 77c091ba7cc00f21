#include "ptspec/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "ptspec/errors.hpp"

namespace ptspec {

namespace {

using cd = std::complex<double>;

cd horner(std::span<const cd> coeffs, cd x) {
  cd v = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
  return v;
}

cd horner_derivative(std::span<const cd> coeffs, cd x) {
  cd v = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 1;) v = v * x + coeffs[i] * static_cast<double>(i);
  return v;
}

// roots of a x^2 + b x + c, cancellation-safe
std::vector<cd> solve_quadratic(cd a, cd b, cd c) {
  cd s = std::sqrt(b * b - 4.0 * a * c);
  // pick the sign that avoids subtracting nearly equal values
  cd u = (std::real(std::conj(b) * s) >= 0.0) ? -(b + s) : -(b - s);
  u *= 0.5;
  if (u == 0.0) return {cd(0.0), cd(0.0)};  // b == 0 and disc == 0 (a != 0)
  return {u / a, c / u};
}

// depressed cubic t^3 + p t + q
std::vector<cd> solve_depressed_cubic(cd p, cd q) {
  constexpr cd omega{-0.5, 0.8660254037844386467637231707529362};
  if (p == 0.0 && q == 0.0) return {0.0, 0.0, 0.0};
  cd s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  cd c1 = -q / 2.0 + s, c2 = -q / 2.0 - s;
  cd pick = std::abs(c1) >= std::abs(c2) ? c1 : c2;
  cd u = std::pow(pick, 1.0 / 3.0);
  std::vector<cd> roots;
  if (u == 0.0) {
    // p == 0: three cube roots of -q
    cd r = std::pow(-q, 1.0 / 3.0);
    roots = {r, r * omega, r * omega * omega};
  } else {
    for (int k = 0; k < 3; ++k) {
      cd uk = u;
      if (k == 1) uk *= omega;
      if (k == 2) uk *= omega * omega;
      roots.push_back(uk - p / (3.0 * uk));
    }
  }
  return roots;
}

// monic cubic x^3 + a x^2 + b x + c
std::vector<cd> solve_cubic(cd a, cd b, cd c) {
  cd p = b - a * a / 3.0;
  cd q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  auto roots = solve_depressed_cubic(p, q);
  for (auto& r : roots) r -= a / 3.0;
  return roots;
}

// monic quartic x^4 + a x^3 + b x^2 + c x + d, Ferrari via the resolvent
// cubic w^3 + 2p w^2 + (p^2 - 4r) w - q^2 = 0 in w = u^2
std::vector<cd> solve_quartic(cd a, cd b, cd c, cd d) {
  cd p = b - 3.0 * a * a / 8.0;
  cd q = c - a * b / 2.0 + a * a * a / 8.0;
  cd r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
  cd shift = -a / 4.0;

  std::vector<cd> ys;
  if (std::abs(q) <= 1e-14 * (1.0 + std::abs(p) + std::abs(r))) {
    // biquadratic: z^2 + p z + r
    for (cd z : solve_quadratic(1.0, p, r)) {
      cd s = std::sqrt(z);
      ys.push_back(s);
      ys.push_back(-s);
    }
  } else {
    auto ws = solve_cubic(2.0 * p, p * p - 4.0 * r, -q * q);
    cd w = ws[0];
    for (cd cand : ws)
      if (std::abs(cand) > std::abs(w)) w = cand;
    cd u = std::sqrt(w);
    cd s = (p + w - q / u) / 2.0;
    cd t = (p + w + q / u) / 2.0;
    for (cd y : solve_quadratic(1.0, u, s)) ys.push_back(y);
    for (cd y : solve_quadratic(1.0, -u, t)) ys.push_back(y);
  }
  for (auto& y : ys) y += shift;
  return ys;
}

// eigenvalues of the companion matrix of a monic polynomial
std::vector<cd> companion_roots(const std::vector<cd>& monic) {
  const std::size_t deg = monic.size() - 1;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (std::size_t i = 0; i + 1 < deg; ++i) comp(i + 1, i) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) comp(i, deg - 1) = -monic[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
  std::vector<cd> roots(deg);
  for (std::size_t i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()(static_cast<long>(i));
  return roots;
}

void newton_polish(std::span<const cd> monic, std::vector<cd>& roots) {
  for (auto& x : roots) {
    cd f = horner(monic, x);
    cd df = horner_derivative(monic, x);
    if (df == 0.0) continue;
    cd next = x - f / df;
    if (std::isfinite(next.real()) && std::isfinite(next.imag()) &&
        std::abs(horner(monic, next)) <= std::abs(f))
      x = next;
  }
}

double max_residual(std::span<const cd> scaled, const std::vector<cd>& roots, double scale) {
  double worst = 0.0;
  for (cd r : roots) worst = std::max(worst, std::abs(horner(scaled, r / scale)));
  return worst;
}

void sort_roots(std::vector<cd>& roots) {
  std::sort(roots.begin(), roots.end(), [](cd a, cd b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

std::vector<cd> polynomial_roots(std::span<const cd> coeffs) {
  if (coeffs.size() < 2) throw StructuralError("polynomial_roots needs degree >= 1");
  if (coeffs.back() == 0.0) throw StructuralError("zero leading coefficient");

  // exact zero constant terms are exact zero roots
  std::size_t zero_roots = 0;
  while (zero_roots + 1 < coeffs.size() && coeffs[zero_roots] == 0.0) ++zero_roots;

  std::vector<cd> monic(coeffs.begin() + static_cast<std::ptrdiff_t>(zero_roots), coeffs.end());
  const cd lead = monic.back();
  for (auto& c : monic) c /= lead;
  monic.back() = 1.0;
  const std::size_t deg = monic.size() - 1;

  std::vector<cd> roots;
  if (deg >= 1) {
    // variable scaling by the Cauchy bound conditions the solve
    double bound = 0.0;
    for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::abs(monic[i]));
    const double scale = 1.0 + bound;
    // coeff of y^i in p(scale*y) / scale^deg; stays monic, roots land in |y| <= 1
    std::vector<cd> scaled(monic.size());
    for (std::size_t i = 0; i < scaled.size(); ++i)
      scaled[i] = monic[i] * std::pow(scale, static_cast<double>(i) - static_cast<double>(deg));

    std::vector<cd> ys;
    switch (deg) {
      case 1:
        ys = {-scaled[0]};
        break;
      case 2:
        ys = solve_quadratic(1.0, scaled[1], scaled[0]);
        break;
      case 3:
        ys = solve_cubic(scaled[2], scaled[1], scaled[0]);
        break;
      case 4:
        ys = solve_quartic(scaled[3], scaled[2], scaled[1], scaled[0]);
        break;
      default:
        ys = companion_roots(scaled);
        break;
    }

    roots.reserve(deg);
    for (cd y : ys) roots.push_back(y * scale);
    newton_polish(monic, roots);

    if (deg == 3 || deg == 4) {
      double maxcoeff = 0.0;
      for (cd c : scaled) maxcoeff = std::max(maxcoeff, std::abs(c));
      if (max_residual(scaled, roots, scale) > 1e-8 * maxcoeff) {
        std::vector<cd> fallback;
        for (cd y : companion_roots(scaled)) fallback.push_back(y * scale);
        newton_polish(monic, fallback);
        if (max_residual(scaled, fallback, scale) < max_residual(scaled, roots, scale))
          roots = std::move(fallback);
      }
    }
  }

  for (std::size_t i = 0; i < zero_roots; ++i) roots.push_back(0.0);
  sort_roots(roots);
  return roots;
}

std::vector<cd> polynomial_roots(const std::vector<cd>& coeffs) {
  return polynomial_roots(std::span<const cd>(coeffs));
}

}  // namespace ptspec
