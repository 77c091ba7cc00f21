#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ptspec {

// n canonical pairs with a fixed basis order (q_1..q_n, p_1..p_n). The
// symplectic structure [O_a, O_b] = i J_ab is determined by that order.
class PhaseSpace {
 public:
  PhaseSpace(std::vector<std::string> coordinates, std::vector<std::string> momenta);

  static std::shared_ptr<const PhaseSpace> make(std::vector<std::string> coordinates,
                                                std::vector<std::string> momenta);
  // Single pair, default names q/p.
  static std::shared_ptr<const PhaseSpace> single(std::string q = "q", std::string p = "p");

  std::size_t pairs() const { return n_; }
  std::size_t dim() const { return 2 * n_; }

  const std::string& name(std::size_t index) const { return names_[index]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool is_coordinate(std::size_t index) const { return index < n_; }
  std::size_t coordinate(std::size_t pair) const { return pair; }
  std::size_t momentum(std::size_t pair) const { return n_ + pair; }

  // Entry of the symplectic form J: +1 at (a, n+a), -1 at (n+a, a), else 0.
  int symplectic(std::size_t row, std::size_t col) const {
    if (col == row + n_) return 1;
    if (row == col + n_) return -1;
    return 0;
  }

  bool operator==(const PhaseSpace& other) const { return names_ == other.names_; }
  bool operator!=(const PhaseSpace& other) const { return !(*this == other); }

 private:
  std::size_t n_;
  std::vector<std::string> names_;  // coordinates then momenta
  std::map<std::string, std::size_t, std::less<>> index_;
};

using PhaseSpacePtr = std::shared_ptr<const PhaseSpace>;

}  // namespace ptspec
