#pragma once

#include <string>

#include "ptspec/charpoly.hpp"
#include "ptspec/classify.hpp"
#include "ptspec/model.hpp"
#include "ptspec/selfforce.hpp"

namespace ptspec {

// Report documents are JSON and carry every exact value twice: as a
// decimal-free rational string ("-3/4", "1/2+3i/4") for lossless archival,
// and as doubles for easy plotting.

// Generic pipeline report for a bound model: adjoint matrix (exact), lambda
// and xi coefficients (exact), roots and verdict. Pretty-printed.
std::string analyze_report(const ModelDefinition& def, const ParameterBinding& binding,
                           const AdjointMatrix& adjoint, const CharacteristicPolynomial& cp,
                           const std::vector<GaussianRational>& xi_coeffs,
                           const SpectrumClassification& classification);

// Self-force report: parameters, closed-form linear root and cubic
// coefficients, classification, predicate and the agreement flag.
std::string selfforce_report(const ModelReport& report);

// Plain-text rendering of an exact matrix with aligned columns.
std::string format_matrix(const AdjointMatrix& m);

}  // namespace ptspec
