#pragma once

#include <array>
#include <string_view>

#include "ptspec/adjoint.hpp"
#include "ptspec/charpoly.hpp"
#include "ptspec/classify.hpp"
#include "ptspec/polynomial.hpp"
#include "ptspec/rational.hpp"

namespace ptspec {

// Parameters of the electromagnetic self-force model: mass m > 0, time
// constant tau > 0, coupling k, and the two added-term strengths A (on
// x^2 + y^2) and B (angular-momentum-like).
struct SelfForceParams {
  Rational m{1};
  Rational tau{1};
  Rational k{0};
  Rational A{0};
  Rational B{0};

  // Throws DegenerateParameterError unless m > 0 and tau > 0.
  void validate() const;
};

// Shared phase space with basis x, y, z, w, p_x, p_y, p_z, p_w.
const PhaseSpacePtr& selfforce_space();

// H = B(w p_z - z p_w)/(m tau) + 2 p_z p_w/(m tau^2) + (p_x p_w - p_y p_z)/(m tau)
//     - m z w/2 + (w p_y + z p_x)/2 + k x y + A(x^2 + y^2)/2
// A = B = 0 reduces to the bare self-force Hamiltonian.
CanonicalPolynomial build_hamiltonian(const SelfForceParams& p);

// The 8x8 adjoint matrix written out entry by entry; must agree exactly with
// adjoint_matrix(build_hamiltonian(p)).
AdjointMatrix adjoint_closed_form(const SelfForceParams& p);

// The linear factor's root: xi = (B^2 - m^2) / (m^2 tau^2).
Rational xi_linear_root(const SelfForceParams& p);

// Coefficients of m^2 tau^2 xi^3 + (m^2 - B^2) xi^2 + 2(AB - km) xi - A^2 + k^2,
// degree-descending.
std::array<Rational, 4> cubic_coefficients(const SelfForceParams& p);

// B^2 > m^2 and A^2 > k^2 and AB > km, all strict, exact rational compares.
// Necessary for an all-positive squared-frequency spectrum; not sufficient
// (the cubic may still have a complex pair).
bool analytic_predicate(const SelfForceParams& p);

struct ModelReport {
  SelfForceParams params;
  Rational xi_linear;
  std::array<Rational, 4> cubic;
  std::vector<GaussianRational> xi_poly;  // exact reduced quartic, ascending
  SpectrumClassification classification;
  bool predicate = false;
  bool agreement = false;  // predicate <=> verdict Unbroken
};

// Full pipeline: build -> adjoint -> characteristic polynomial -> xi roots ->
// classify; the closed forms above are carried alongside for the report.
ModelReport classify_params(const SelfForceParams& p, double tol_im = kDefaultTolIm,
                            double tol_boundary = kDefaultTolBoundary);

// Model-file text for the same Hamiltonian, parsable by parse_model.
std::string_view selfforce_model_text();

}  // namespace ptspec
