#pragma once

#include <cstddef>
#include <vector>

#include "ptspec/gaussian.hpp"

namespace ptspec {

// Dense square matrix over GaussianRational. Small sizes only (2n x 2n).
class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
    return m;
  }

  std::size_t size() const { return n_; }

  GaussianRational& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  const GaussianRational& operator()(std::size_t row, std::size_t col) const {
    return data_[row * n_ + col];
  }

  GaussianRational trace() const {
    GaussianRational t;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  ExactMatrix& add_to_diagonal(const GaussianRational& s) {
    for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) += s;
    return *this;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t k = 0; k < a.n_; ++k) {
        const GaussianRational& aik = a(i, k);
        if (aik.is_zero()) continue;  // adjoint matrices are sparse
        for (std::size_t j = 0; j < a.n_; ++j) {
          const GaussianRational& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix m) {
    for (auto& e : m.data_) e *= s;
    return m;
  }

  bool operator==(const ExactMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

 private:
  std::size_t n_;
  std::vector<GaussianRational> data_;
};

}  // namespace ptspec
