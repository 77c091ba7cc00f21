#include "ptspec/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <thread>

#include "ptspec/errors.hpp"

namespace ptspec {

namespace {

const std::set<std::string>& param_names() {
  static const std::set<std::string> names{"m", "tau", "k", "A", "B"};
  return names;
}

SelfForceParams params_from(const std::map<std::string, Rational>& values) {
  SelfForceParams p;
  p.m = values.at("m");
  p.tau = values.at("tau");
  p.k = values.at("k");
  p.A = values.at("A");
  p.B = values.at("B");
  return p;
}

std::string format9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void check_axis(const AxisSpec& axis) {
  if (!param_names().count(axis.name))
    throw StructuralError("unknown scan parameter '" + axis.name + "'");
  if (axis.steps < 2) throw StructuralError("axis '" + axis.name + "' needs at least 2 steps");
  if (!(axis.min < axis.max))
    throw StructuralError("axis '" + axis.name + "' needs min < max");
  if ((axis.name == "m" || axis.name == "tau") && axis.min <= 0)
    throw StructuralError("axis '" + axis.name + "' must stay positive");
}

}  // namespace

void GridSpec::validate() const {
  check_axis(axis1);
  check_axis(axis2);
  if (axis1.name == axis2.name) throw StructuralError("scan axes must name distinct parameters");
  if (!(tol_im > 0.0) || !(tol_boundary > 0.0))
    throw StructuralError("tolerances must be positive");
  for (const auto& [name, value] : fixed) {
    if (!param_names().count(name))
      throw StructuralError("unknown fixed parameter '" + name + "'");
    if (name == axis1.name || name == axis2.name)
      throw StructuralError("parameter '" + name + "' is both an axis and fixed");
  }
  for (const auto& name : param_names()) {
    if (name != axis1.name && name != axis2.name && !fixed.count(name))
      throw StructuralError("parameter '" + name + "' is neither an axis nor fixed");
  }
}

Rational GridSpec::sample(const AxisSpec& axis, std::size_t j) {
  const Rational span = axis.max - axis.min;
  const Rational step(static_cast<long>(j), static_cast<long>(axis.steps - 1));
  return axis.min + span * step;
}

std::size_t RegionGrid::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.verdict == v;
  return n;
}

std::size_t RegionGrid::disagreements() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += !c.agreement;
  return n;
}

RegionGrid run_scan(const GridSpec& spec, unsigned workers) {
  spec.validate();
  if (workers == 0) workers = 1;

  const std::size_t s1 = spec.axis1.steps, s2 = spec.axis2.steps;
  RegionGrid grid{spec, std::vector<CellResult>(s1 * s2)};

  auto compute_cell = [&](std::size_t index) {
    const std::size_t j1 = index % s1, j2 = index / s1;
    std::map<std::string, Rational> values = spec.fixed;
    values[spec.axis1.name] = GridSpec::sample(spec.axis1, j1);
    values[spec.axis2.name] = GridSpec::sample(spec.axis2, j2);
    ModelReport report = classify_params(params_from(values), spec.tol_im, spec.tol_boundary);

    CellResult cell;
    cell.verdict = report.classification.verdict;
    cell.predicate = report.predicate;
    cell.agreement = report.agreement;
    double min_im = std::numeric_limits<double>::infinity();
    double min_re = std::numeric_limits<double>::infinity();
    for (const auto& xi : report.classification.xis) {
      min_im = std::min(min_im, std::abs(xi.imag()));
      min_re = std::min(min_re, xi.real());
    }
    cell.min_im_xi = min_im;
    cell.min_re_xi = min_re;
    grid.cells[index] = cell;
  };

  const std::size_t total = grid.cells.size();
  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) compute_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
      for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) compute_cell(i);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
  }
  return grid;
}

std::string csv_bytes(const RegionGrid& grid) {
  std::string out = "axis1,axis2,verdict,predicate,agreement,min_im_xi,min_re_xi\n";
  const std::size_t s1 = grid.spec.axis1.steps, s2 = grid.spec.axis2.steps;
  for (std::size_t j2 = 0; j2 < s2; ++j2) {
    const double a2 = to_double(GridSpec::sample(grid.spec.axis2, j2));
    for (std::size_t j1 = 0; j1 < s1; ++j1) {
      const double a1 = to_double(GridSpec::sample(grid.spec.axis1, j1));
      const CellResult& c = grid.cell(j1, j2);
      out += format9(a1);
      out += ',';
      out += format9(a2);
      out += ',';
      out += to_string(c.verdict);
      out += ',';
      out += c.predicate ? "true" : "false";
      out += ',';
      out += c.agreement ? "true" : "false";
      out += ',';
      out += format9(c.min_im_xi);
      out += ',';
      out += format9(c.min_re_xi);
      out += '\n';
    }
  }
  return out;
}

std::string pgm_bytes(const RegionGrid& grid) {
  const std::size_t s1 = grid.spec.axis1.steps, s2 = grid.spec.axis2.steps;
  std::string out = "P5\n" + std::to_string(s1) + " " + std::to_string(s2) + "\n255\n";
  out.reserve(out.size() + s1 * s2);
  for (std::size_t row = 0; row < s2; ++row) {
    const std::size_t j2 = s2 - 1 - row;  // axis2 descending top to bottom
    for (std::size_t j1 = 0; j1 < s1; ++j1) {
      switch (grid.cell(j1, j2).verdict) {
        case Verdict::Unbroken: out.push_back(static_cast<char>(255)); break;
        case Verdict::Boundary: out.push_back(static_cast<char>(128)); break;
        case Verdict::Broken: out.push_back(static_cast<char>(0)); break;
      }
    }
  }
  return out;
}

std::string summary_line(const RegionGrid& grid) {
  return "cells=" + std::to_string(grid.cells.size()) +
         " unbroken=" + std::to_string(grid.count(Verdict::Unbroken)) +
         " broken=" + std::to_string(grid.count(Verdict::Broken)) +
         " boundary=" + std::to_string(grid.count(Verdict::Boundary)) +
         " disagreements=" + std::to_string(grid.disagreements());
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace ptspec
