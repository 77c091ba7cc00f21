#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ptspec {

// All roots of the polynomial with ascending coefficients c[0] + c[1]x + ...,
// with multiplicity, sorted by (real, imag). Degree <= 2 uses closed forms,
// 3-4 Cardano/Ferrari with a companion-matrix fallback, >= 5 the companion
// matrix; every root gets one Newton polishing step. Exact trailing zeros are
// deflated as exact zero roots. Coefficients are normalized monic and the
// variable scaled by the Cauchy bound before solving, which keeps residuals
// within 1e-8 * max|coeff| of the scaled polynomial.
// Throws StructuralError on degree < 1 or a zero leading coefficient.
std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs);

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs);

}  // namespace ptspec
