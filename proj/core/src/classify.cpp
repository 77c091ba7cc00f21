#include "ptspec/classify.hpp"

#include <algorithm>
#include <cmath>

#include "ptspec/errors.hpp"

namespace ptspec {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Unbroken: return "Unbroken";
    case Verdict::Broken: return "Broken";
    default: return "Boundary";
  }
}

SpectrumClassification classify_spectrum(std::vector<std::complex<double>> xis, double tol_im,
                                         double tol_boundary) {
  if (!(tol_im > 0.0) || !(tol_boundary > 0.0))
    throw StructuralError("classification tolerances must be positive");

  std::sort(xis.begin(), xis.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  SpectrumClassification out;
  out.tol_im = tol_im;
  out.tol_boundary = tol_boundary;

  bool any_nonreal = false, any_negative = false, any_band = false;
  for (const auto& xi : xis) {
    const bool real_ok = std::abs(xi.imag()) <= tol_im * (1.0 + std::abs(xi));
    if (!real_ok)
      any_nonreal = true;
    else if (xi.real() < -tol_boundary)
      any_negative = true;
    else if (xi.real() <= tol_boundary)
      any_band = true;
  }

  for (std::size_t i = 0; i < xis.size() && !out.degenerate; ++i) {
    for (std::size_t j = i + 1; j < xis.size(); ++j) {
      const double scale = std::max({1.0, std::abs(xis[i]), std::abs(xis[j])});
      if (std::abs(xis[i] - xis[j]) <= kRootMergeTol * scale) {
        out.degenerate = true;
        break;
      }
    }
  }

  if (out.degenerate)
    out.verdict = Verdict::Boundary;
  else if (any_nonreal || any_negative)
    out.verdict = Verdict::Broken;
  else if (any_band)
    out.verdict = Verdict::Boundary;
  else
    out.verdict = Verdict::Unbroken;

  out.lambdas.reserve(2 * xis.size());
  for (const auto& xi : xis) {
    const auto s = std::sqrt(xi);
    out.lambdas.push_back(s);
    out.lambdas.push_back(-s);
  }
  std::sort(out.lambdas.begin(), out.lambdas.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  out.xis = std::move(xis);
  return out;
}

}  // namespace ptspec
