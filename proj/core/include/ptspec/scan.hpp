#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>

#include "ptspec/classify.hpp"
#include "ptspec/rational.hpp"
#include "ptspec/selfforce.hpp"

namespace ptspec {

struct AxisSpec {
  std::string name;  // one of m, tau, k, A, B
  Rational min;
  Rational max;
  std::size_t steps = 0;
};

// 2-D sweep over two self-force parameters with the rest held fixed.
// Samples are exact: min + j*(max-min)/(steps-1) in rational arithmetic.
struct GridSpec {
  AxisSpec axis1, axis2;
  std::map<std::string, Rational> fixed;
  double tol_im = kDefaultTolIm;
  double tol_boundary = kDefaultTolBoundary;

  // steps >= 2, min < max, distinct axis names not repeated in fixed, all
  // five parameters covered, m/tau kept positive. Throws StructuralError.
  void validate() const;

  static Rational sample(const AxisSpec& axis, std::size_t j);
};

struct CellResult {
  Verdict verdict = Verdict::Boundary;
  bool predicate = false;
  bool agreement = false;
  double min_im_xi = 0.0;  // min |Im xi| over the four roots
  double min_re_xi = 0.0;  // min Re xi over the four roots
};

struct RegionGrid {
  GridSpec spec;
  std::vector<CellResult> cells;  // row-major: index = j2 * steps1 + j1

  const CellResult& cell(std::size_t j1, std::size_t j2) const {
    return cells[j2 * spec.axis1.steps + j1];
  }
  std::size_t count(Verdict v) const;
  std::size_t disagreements() const;
};

// Cells are pure and order-independent; results are stored by index, so the
// output is byte-identical for any worker count.
RegionGrid run_scan(const GridSpec& spec, unsigned workers = 1);

// Header: axis1,axis2,verdict,predicate,agreement,min_im_xi,min_re_xi
// One row per cell (axis2 ascending outer, axis1 ascending inner), LF line
// endings, floating fields printed with 9 significant digits.
std::string csv_bytes(const RegionGrid& grid);

// Binary P5, maxval 255, width = steps1, height = steps2, rows ordered by
// axis2 descending. Unbroken=255, Boundary=128, Broken=0.
std::string pgm_bytes(const RegionGrid& grid);

// One line with per-verdict counts and the number of agreement=false cells.
std::string summary_line(const RegionGrid& grid);

// Throws IoError on failure.
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace ptspec
