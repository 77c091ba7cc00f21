#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace ptspec {

enum class Verdict { Unbroken, Broken, Boundary };

std::string_view to_string(Verdict v);

inline constexpr double kDefaultTolIm = 1e-9;
inline constexpr double kDefaultTolBoundary = 1e-9;
// Squared-frequency roots closer than this (relative above magnitude 1) are
// treated as degenerate; degeneracy marks the transition, so it forces the
// Boundary verdict.
inline constexpr double kRootMergeTol = 1e-7;

struct SpectrumClassification {
  std::vector<std::complex<double>> lambdas;  // +/- sqrt of each xi
  std::vector<std::complex<double>> xis;
  Verdict verdict = Verdict::Boundary;
  double tol_im = kDefaultTolIm;
  double tol_boundary = kDefaultTolBoundary;
  bool degenerate = false;  // some xi pair merged within kRootMergeTol
};

// Unbroken: every xi real within |Im| <= tol_im*(1+|xi|) and Re > tol_boundary.
// Broken: some xi non-real beyond tolerance, or with Re < -tol_boundary.
// Boundary: otherwise (a root inside the tol_boundary band of zero), and
// always when two roots merge. Tolerances must be positive.
SpectrumClassification classify_spectrum(std::vector<std::complex<double>> xis, double tol_im,
                                         double tol_boundary);

}  // namespace ptspec
