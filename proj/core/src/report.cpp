#include "ptspec/report.hpp"

#include <json.hpp>

namespace ptspec {

namespace {

using nlohmann::json;

json json_rational(const Rational& r) {
  return json{{"exact", to_string(r)}, {"value", to_double(r)}};
}

json json_gaussian(const GaussianRational& g) {
  return json{{"exact", to_string(g)}, {"re", to_double(g.re)}, {"im", to_double(g.im)}};
}

json json_complex(const std::complex<double>& c) {
  return json{{"re", c.real()}, {"im", c.imag()}};
}

json json_classification(const SpectrumClassification& c) {
  json xis = json::array(), lambdas = json::array();
  for (const auto& xi : c.xis) xis.push_back(json_complex(xi));
  for (const auto& l : c.lambdas) lambdas.push_back(json_complex(l));
  return json{{"verdict", std::string(to_string(c.verdict))},
              {"xi_roots", std::move(xis)},
              {"lambda_roots", std::move(lambdas)},
              {"tolerances", {{"im", c.tol_im}, {"boundary", c.tol_boundary}}},
              {"degenerate", c.degenerate}};
}

json json_matrix(const AdjointMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.entries.size(); ++j)
      row.push_back(json_gaussian(m.entries(i, j)));
    rows.push_back(std::move(row));
  }
  json basis = json::array();
  for (std::size_t i = 0; i < m.space->dim(); ++i) basis.push_back(m.space->name(i));
  return json{{"basis", std::move(basis)}, {"entries", std::move(rows)}};
}

json json_coeff_list(const std::vector<GaussianRational>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(json_gaussian(c));
  return arr;
}

}  // namespace

std::string analyze_report(const ModelDefinition& def, const ParameterBinding& binding,
                           const AdjointMatrix& adjoint, const CharacteristicPolynomial& cp,
                           const std::vector<GaussianRational>& xi_coeffs,
                           const SpectrumClassification& classification) {
  json pairs = json::array();
  const std::size_t n = def.space->pairs();
  for (std::size_t i = 0; i < n; ++i)
    pairs.push_back(json::array({def.space->name(i), def.space->name(n + i)}));

  json bound = json::object();
  for (const auto& [name, value] : binding) bound[name] = json_rational(value);

  json doc{{"model", {{"pairs", std::move(pairs)}, {"binding", std::move(bound)}}},
           {"adjoint", json_matrix(adjoint)},
           {"characteristic",
            {{"lambda_ascending", json_coeff_list(cp.lambda_coeffs)},
             {"xi_ascending", json_coeff_list(xi_coeffs)}}},
           {"classification", json_classification(classification)}};
  return doc.dump(2) + "\n";
}

std::string selfforce_report(const ModelReport& report) {
  json cubic = json::array();
  for (const auto& c : report.cubic) cubic.push_back(json_rational(c));
  json xi_poly = json::array();
  for (const auto& c : report.xi_poly) xi_poly.push_back(json_gaussian(c));

  json doc{{"params",
            {{"m", json_rational(report.params.m)},
             {"tau", json_rational(report.params.tau)},
             {"k", json_rational(report.params.k)},
             {"A", json_rational(report.params.A)},
             {"B", json_rational(report.params.B)}}},
           {"xi_linear", json_rational(report.xi_linear)},
           {"cubic_descending", std::move(cubic)},
           {"xi_ascending", std::move(xi_poly)},
           {"classification", json_classification(report.classification)},
           {"predicate", report.predicate},
           {"agreement", report.agreement}};
  return doc.dump(2) + "\n";
}

std::string format_matrix(const AdjointMatrix& m) {
  const std::size_t dim = m.entries.size();
  std::vector<std::string> cells(dim * dim);
  std::vector<std::size_t> width(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      cells[i * dim + j] = to_string(m.entries(i, j));
      width[j] = std::max(width[j], cells[i * dim + j].size());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < dim; ++i) {
    out += "[ ";
    for (std::size_t j = 0; j < dim; ++j) {
      const std::string& cell = cells[i * dim + j];
      out.append(width[j] - cell.size(), ' ');
      out += cell;
      out += (j + 1 == dim) ? " ]\n" : "  ";
    }
  }
  return out;
}

}  // namespace ptspec
