#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ptspec/classify.hpp"
#include "ptspec/errors.hpp"
#include "ptspec/model.hpp"
#include "ptspec/report.hpp"
#include "ptspec/roots.hpp"
#include "ptspec/scan.hpp"
#include "ptspec/selfforce.hpp"

namespace {

constexpr int kExitUnbroken = 0;
constexpr int kExitBroken = 1;
constexpr int kExitBoundary = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitIncompleteBinding = 4;
constexpr int kExitIoFailure = 5;

int verdict_exit_code(ptspec::Verdict v) {
  switch (v) {
    case ptspec::Verdict::Unbroken: return kExitUnbroken;
    case ptspec::Verdict::Broken: return kExitBroken;
    default: return kExitBoundary;
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ptspec::IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ptspec::ParameterBinding parse_overrides(const std::vector<std::string>& sets) {
  ptspec::ParameterBinding binding;
  for (const auto& kv : sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ptspec::StructuralError("--set expects name=value, got '" + kv + "'");
    binding[kv.substr(0, eq)] = ptspec::parse_rational(kv.substr(eq + 1));
  }
  return binding;
}

ptspec::AxisSpec parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto colon = text.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.size() != 4)
    throw ptspec::StructuralError("axis spec must be name:min:max:steps, got '" + text + "'");
  ptspec::AxisSpec axis;
  axis.name = parts[0];
  axis.min = ptspec::parse_rational(parts[1]);
  axis.max = ptspec::parse_rational(parts[2]);
  long steps = std::stol(parts[3]);
  if (steps < 0) throw ptspec::StructuralError("negative step count in '" + text + "'");
  axis.steps = static_cast<std::size_t>(steps);
  return axis;
}

struct AnalyzeOptions {
  std::string model_path;
  std::vector<std::string> sets;
  double tol_im = ptspec::kDefaultTolIm;
  double tol_boundary = ptspec::kDefaultTolBoundary;
  std::string json_path;
};

int run_analyze(const AnalyzeOptions& opt) {
  ptspec::ModelDefinition def = ptspec::parse_model(read_text_file(opt.model_path));
  ptspec::ParameterBinding binding = ptspec::complete_binding(def, parse_overrides(opt.sets));
  ptspec::CanonicalPolynomial h = ptspec::bind_and_expand(def, binding);
  ptspec::AdjointMatrix adj = ptspec::adjoint_matrix(h);
  ptspec::CharacteristicPolynomial cp = ptspec::characteristic_polynomial(adj);
  std::vector<ptspec::GaussianRational> xi = ptspec::reduce_to_xi(cp);

  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(xi.size());
  for (const auto& c : xi) coeffs.push_back(c.to_complex());
  ptspec::SpectrumClassification cls =
      ptspec::classify_spectrum(ptspec::polynomial_roots(coeffs), opt.tol_im, opt.tol_boundary);

  std::string doc = ptspec::analyze_report(def, binding, adj, cp, xi, cls);
  if (opt.json_path.empty()) {
    std::cout << doc;
  } else {
    ptspec::write_file(opt.json_path, doc);
    std::cout << "verdict: " << ptspec::to_string(cls.verdict) << " (report written to "
              << opt.json_path << ")\n";
  }
  return verdict_exit_code(cls.verdict);
}

struct SelfforceOptions {
  std::string m, tau, k, A, B;
  double tol_im = ptspec::kDefaultTolIm;
  double tol_boundary = ptspec::kDefaultTolBoundary;
  std::string json_path;
};

int run_selfforce(const SelfforceOptions& opt) {
  ptspec::SelfForceParams params;
  params.m = ptspec::parse_rational(opt.m);
  params.tau = ptspec::parse_rational(opt.tau);
  params.k = ptspec::parse_rational(opt.k);
  params.A = ptspec::parse_rational(opt.A);
  params.B = ptspec::parse_rational(opt.B);

  ptspec::ModelReport report = ptspec::classify_params(params, opt.tol_im, opt.tol_boundary);
  std::string doc = ptspec::selfforce_report(report);
  if (opt.json_path.empty()) {
    std::cout << doc;
  } else {
    ptspec::write_file(opt.json_path, doc);
    std::cout << "verdict: " << ptspec::to_string(report.classification.verdict)
              << " (report written to " << opt.json_path << ")\n";
  }
  return verdict_exit_code(report.classification.verdict);
}

struct ScanOptions {
  std::vector<std::string> fixed;
  std::string axis1, axis2;
  std::string csv_path, pgm_path;
  double tol_im = ptspec::kDefaultTolIm;
  double tol_boundary = ptspec::kDefaultTolBoundary;
  unsigned workers = 1;
};

int run_scan_cmd(const ScanOptions& opt) {
  ptspec::GridSpec spec;
  spec.axis1 = parse_axis(opt.axis1);
  spec.axis2 = parse_axis(opt.axis2);
  for (const auto& kv : opt.fixed) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ptspec::StructuralError("--fix expects name=value, got '" + kv + "'");
    spec.fixed[kv.substr(0, eq)] = ptspec::parse_rational(kv.substr(eq + 1));
  }
  spec.tol_im = opt.tol_im;
  spec.tol_boundary = opt.tol_boundary;

  ptspec::RegionGrid grid = ptspec::run_scan(spec, opt.workers);
  ptspec::write_file(opt.csv_path, ptspec::csv_bytes(grid));
  if (!opt.pgm_path.empty()) ptspec::write_file(opt.pgm_path, ptspec::pgm_bytes(grid));
  std::cout << ptspec::summary_line(grid) << "\n";
  return 0;
}

struct MatrixOptions {
  std::string model_path;
  std::vector<std::string> sets;
};

int run_matrix(const MatrixOptions& opt) {
  ptspec::ModelDefinition def = ptspec::parse_model(read_text_file(opt.model_path));
  ptspec::ParameterBinding binding = ptspec::complete_binding(def, parse_overrides(opt.sets));
  ptspec::CanonicalPolynomial h = ptspec::bind_and_expand(def, binding);
  ptspec::AdjointMatrix adj = ptspec::adjoint_matrix(h);

  std::cout << "basis:";
  for (std::size_t i = 0; i < def.space->dim(); ++i) std::cout << " " << def.space->name(i);
  std::cout << "\n" << ptspec::format_matrix(adj);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral classification of quadratic Hamiltonians via the adjoint representation"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  auto* analyze = app.add_subcommand("analyze", "Classify the spectrum of a model file");
  analyze->add_option("model", analyze_opt.model_path, "model file")->required();
  analyze->add_option("--set", analyze_opt.sets, "parameter override name=value");
  analyze->add_option("--tol-im", analyze_opt.tol_im, "imaginary-part tolerance");
  analyze->add_option("--tol-boundary", analyze_opt.tol_boundary, "zero-boundary tolerance");
  analyze->add_option("--json", analyze_opt.json_path, "write the JSON report here");

  SelfforceOptions sf_opt;
  auto* selfforce = app.add_subcommand("selfforce", "Classify a self-force parameter point");
  selfforce->add_option("-m", sf_opt.m, "mass")->required();
  selfforce->add_option("-t,--tau", sf_opt.tau, "time constant")->required();
  selfforce->add_option("-k", sf_opt.k, "coupling")->required();
  selfforce->add_option("-A", sf_opt.A, "x^2+y^2 term strength")->required();
  selfforce->add_option("-B", sf_opt.B, "angular term strength")->required();
  selfforce->add_option("--tol-im", sf_opt.tol_im, "imaginary-part tolerance");
  selfforce->add_option("--tol-boundary", sf_opt.tol_boundary, "zero-boundary tolerance");
  selfforce->add_option("--json", sf_opt.json_path, "write the JSON report here");

  ScanOptions scan_opt;
  auto* scan = app.add_subcommand("scan", "Sweep a 2-D self-force parameter grid");
  scan->add_option("--fix", scan_opt.fixed, "fixed parameter name=value");
  scan->add_option("--axis1", scan_opt.axis1, "first axis name:min:max:steps")->required();
  scan->add_option("--axis2", scan_opt.axis2, "second axis name:min:max:steps")->required();
  scan->add_option("--csv", scan_opt.csv_path, "CSV output path")->required();
  scan->add_option("--pgm", scan_opt.pgm_path, "optional PGM region image");
  scan->add_option("--tol-im", scan_opt.tol_im, "imaginary-part tolerance");
  scan->add_option("--tol-boundary", scan_opt.tol_boundary, "zero-boundary tolerance");
  scan->add_option("--workers", scan_opt.workers, "number of worker threads");

  MatrixOptions matrix_opt;
  auto* matrix = app.add_subcommand("matrix", "Print the exact adjoint matrix of a model");
  matrix->add_option("model", matrix_opt.model_path, "model file")->required();
  matrix->add_option("--set", matrix_opt.sets, "parameter override name=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (*analyze) return run_analyze(analyze_opt);
    if (*selfforce) return run_selfforce(sf_opt);
    if (*scan) return run_scan_cmd(scan_opt);
    if (*matrix) return run_matrix(matrix_opt);
  } catch (const ptspec::MissingParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIncompleteBinding;
  } catch (const ptspec::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoFailure;
  } catch (const ptspec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
