#include "fibmod/module.hpp"

namespace fibmod {

ModuleElement::ModuleElement(std::vector<Element> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) fail(Errc::InvalidArgument, "module elements need rank >= 1");
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!same_ring(coords_[i].ring(), coords_[0].ring()))
      fail(Errc::DescriptorMismatch, "module coordinates must share one ring");
}

ModuleElement::ModuleElement(Element scalar) { coords_.push_back(std::move(scalar)); }

ModuleElement ModuleElement::zero(const Ring& ring, std::size_t rank) {
  if (rank == 0) fail(Errc::InvalidArgument, "module elements need rank >= 1");
  return ModuleElement(std::vector<Element>(rank, Element::zero(ring)));
}

const Element& ModuleElement::scalar() const {
  if (rank() != 1) fail(Errc::InvalidArgument, "scalar() on a rank-" + std::to_string(rank()) + " element");
  return coords_[0];
}

bool ModuleElement::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

void ModuleElement::require_compatible(const ModuleElement& rhs, const char* op) const {
  if (rank() != rhs.rank())
    fail(Errc::DescriptorMismatch, std::string("cannot ") + op + " module elements of rank " +
                                       std::to_string(rank()) + " and " + std::to_string(rhs.rank()));
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& rhs) {
  require_compatible(rhs, "add");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& rhs) {
  require_compatible(rhs, "subtract");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

ModuleElement& ModuleElement::operator*=(const Element& scalar) {
  for (auto& c : coords_) c = scalar * c;
  return *this;
}

ModuleElement kron(const ModuleElement& lhs, const ModuleElement& rhs) {
  std::vector<Element> out;
  out.reserve(lhs.rank() * rhs.rank());
  for (const auto& x : lhs.coords_)
    for (const auto& y : rhs.coords_) out.push_back(x * y);
  return ModuleElement(std::move(out));
}

ModuleElement concat(const ModuleElement& lhs, const ModuleElement& rhs) {
  std::vector<Element> out = lhs.coords_;
  out.insert(out.end(), rhs.coords_.begin(), rhs.coords_.end());
  return ModuleElement(std::move(out));
}

ModuleElement ModuleElement::project(std::size_t first, std::size_t count) const {
  if (count == 0 || first + count > rank()) fail(Errc::InvalidArgument, "projection range out of bounds");
  return ModuleElement(std::vector<Element>(coords_.begin() + static_cast<std::ptrdiff_t>(first),
                                            coords_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

std::string ModuleElement::to_string() const {
  if (rank() == 1) return coords_[0].to_string();
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].to_string();
  }
  return s + "]";
}

std::size_t uniform_rank(std::span<const ModuleElement> entries) {
  if (entries.empty()) fail(Errc::InvalidArgument, "empty entry list");
  const auto rank = entries.front().rank();
  const auto& ring = entries.front().ring();
  for (const auto& e : entries) {
    if (e.rank() != rank) fail(Errc::InvalidArgument, "entries have mixed module ranks");
    if (!same_ring(e.ring(), ring)) fail(Errc::DescriptorMismatch, "entries live in different rings");
  }
  return rank;
}

}  // namespace fibmod
