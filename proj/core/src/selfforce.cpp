#include "ptspec/selfforce.hpp"

#include "ptspec/errors.hpp"
#include "ptspec/roots.hpp"

namespace ptspec {

namespace {

enum Basis : std::size_t { X, Y, Z, W, PX, PY, PZ, PW };

Monomial mono(std::initializer_list<std::size_t> factors) {
  Monomial m(8);
  for (auto f : factors) ++m.exponents[f];
  return m;
}

GaussianRational imag(Rational v) { return {Rational(0), std::move(v)}; }

}  // namespace

void SelfForceParams::validate() const {
  if (m <= 0) throw DegenerateParameterError("mass m must be positive, got " + to_string(m));
  if (tau <= 0)
    throw DegenerateParameterError("time constant tau must be positive, got " + to_string(tau));
}

const PhaseSpacePtr& selfforce_space() {
  static const PhaseSpacePtr space =
      PhaseSpace::make({"x", "y", "z", "w"}, {"p_x", "p_y", "p_z", "p_w"});
  return space;
}

CanonicalPolynomial build_hamiltonian(const SelfForceParams& p) {
  p.validate();
  const Rational mt = p.m * p.tau;
  CanonicalPolynomial h(selfforce_space());
  h.add_term(mono({W, PZ}), Rational(p.B / mt));
  h.add_term(mono({Z, PW}), Rational(-p.B / mt));
  h.add_term(mono({PZ, PW}), Rational(2 / (mt * p.tau)));
  h.add_term(mono({PX, PW}), Rational(1 / mt));
  h.add_term(mono({PY, PZ}), Rational(-1 / mt));
  h.add_term(mono({Z, W}), Rational(-p.m / 2));
  h.add_term(mono({W, PY}), Rational(1, 2));
  h.add_term(mono({Z, PX}), Rational(1, 2));
  h.add_term(mono({X, Y}), p.k);
  h.add_term(mono({X, X}), Rational(p.A / 2));
  h.add_term(mono({Y, Y}), Rational(p.A / 2));
  return h;
}

AdjointMatrix adjoint_closed_form(const SelfForceParams& p) {
  p.validate();
  const Rational r = 1 / (p.m * p.tau);           // 1/(m tau)
  const Rational r2 = 2 / (p.m * p.tau * p.tau);  // 2/(m tau^2)
  const Rational half(1, 2);

  ExactMatrix m(8);
  m(X, PX) = imag(p.A);
  m(X, PY) = imag(p.k);
  m(Y, PX) = imag(p.k);
  m(Y, PY) = imag(p.A);
  m(Z, X) = imag(-half);
  m(Z, W) = imag(p.B * r);
  m(Z, PW) = imag(-p.m / 2);
  m(W, Y) = imag(-half);
  m(W, Z) = imag(-p.B * r);
  m(W, PZ) = imag(-p.m / 2);
  m(PX, W) = imag(-r);
  m(PX, PZ) = imag(half);
  m(PY, Z) = imag(r);
  m(PY, PW) = imag(half);
  m(PZ, Y) = imag(r);
  m(PZ, W) = imag(-r2);
  m(PZ, PW) = imag(p.B * r);
  m(PW, X) = imag(-r);
  m(PW, Z) = imag(-r2);
  m(PW, PZ) = imag(-p.B * r);
  return {selfforce_space(), std::move(m)};
}

Rational xi_linear_root(const SelfForceParams& p) {
  p.validate();
  return (p.B * p.B - p.m * p.m) / (p.m * p.m * p.tau * p.tau);
}

std::array<Rational, 4> cubic_coefficients(const SelfForceParams& p) {
  p.validate();
  return {Rational(p.m * p.m * p.tau * p.tau), Rational(p.m * p.m - p.B * p.B),
          Rational(2 * (p.A * p.B - p.k * p.m)), Rational(p.k * p.k - p.A * p.A)};
}

bool analytic_predicate(const SelfForceParams& p) {
  p.validate();
  return p.B * p.B > p.m * p.m && p.A * p.A > p.k * p.k && p.A * p.B > p.k * p.m;
}

ModelReport classify_params(const SelfForceParams& p, double tol_im, double tol_boundary) {
  p.validate();
  ModelReport report;
  report.params = p;
  report.xi_linear = xi_linear_root(p);
  report.cubic = cubic_coefficients(p);

  AdjointMatrix adj = adjoint_matrix(build_hamiltonian(p));
  CharacteristicPolynomial cp = characteristic_polynomial(adj);
  report.xi_poly = reduce_to_xi(cp);

  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(report.xi_poly.size());
  for (const auto& c : report.xi_poly) coeffs.push_back(c.to_complex());
  report.classification = classify_spectrum(polynomial_roots(coeffs), tol_im, tol_boundary);

  report.predicate = analytic_predicate(p);
  report.agreement = report.predicate == (report.classification.verdict == Verdict::Unbroken);
  return report;
}

std::string_view selfforce_model_text() {
  return "# Electromagnetic self-force model\n"
         "pairs: x/p_x, y/p_y, z/p_z, w/p_w\n"
         "params: m=1, tau=1, k=1, A=0, B=0\n"
         "H = B*(w*p_z - z*p_w)/(m*tau) + 2*p_z*p_w/(m*tau^2)\n"
         "  + (p_x*p_w - p_y*p_z)/(m*tau) - m*z*w/2\n"
         "  + (w*p_y + z*p_x)/2 + k*x*y + A*(x^2 + y^2)/2\n";
}

}  // namespace ptspec
