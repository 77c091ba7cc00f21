#include "ptspec/gaussian.hpp"

namespace ptspec {

namespace {

// |v| rendered with the imaginary unit folded into the numerator:
// 1 -> "i", 1/2 -> "i/2", 3/4 -> "3i/4", 2 -> "2i".
std::string imag_magnitude(const Rational& v) {
  mpz_class num = abs(v.get_num());
  const mpz_class& den = v.get_den();
  std::string s = (num == 1) ? "i" : num.get_str() + "i";
  if (den != 1) s += "/" + den.get_str();
  return s;
}

}  // namespace

std::string to_string(const GaussianRational& g) {
  if (g.im == 0) return to_string(g.re);
  std::string imag = (g.im < 0 ? "-" : "") + imag_magnitude(g.im);
  if (g.re == 0) return imag;
  if (g.im < 0) return to_string(g.re) + imag;
  return to_string(g.re) + "+" + imag;
}

}  // namespace ptspec
