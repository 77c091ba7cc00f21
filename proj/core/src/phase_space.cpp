#include "ptspec/phase_space.hpp"

#include "ptspec/errors.hpp"

namespace ptspec {

PhaseSpace::PhaseSpace(std::vector<std::string> coordinates, std::vector<std::string> momenta)
    : n_(coordinates.size()) {
  if (n_ == 0) throw StructuralError("phase space needs at least one canonical pair");
  if (momenta.size() != n_)
    throw StructuralError("coordinate and momentum name lists differ in length");
  names_.reserve(2 * n_);
  for (auto& c : coordinates) names_.push_back(std::move(c));
  for (auto& p : momenta) names_.push_back(std::move(p));
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw StructuralError("empty operator name");
    if (!index_.emplace(names_[i], i).second)
      throw StructuralError("duplicate operator name '" + names_[i] + "'");
  }
}

std::shared_ptr<const PhaseSpace> PhaseSpace::make(std::vector<std::string> coordinates,
                                                   std::vector<std::string> momenta) {
  return std::make_shared<const PhaseSpace>(std::move(coordinates), std::move(momenta));
}

std::shared_ptr<const PhaseSpace> PhaseSpace::single(std::string q, std::string p) {
  return make({std::move(q)}, {std::move(p)});
}

std::optional<std::size_t> PhaseSpace::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace ptspec
