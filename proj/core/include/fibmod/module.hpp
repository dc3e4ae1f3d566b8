#pragma once

#include <span>
#include <string>
#include <vector>

#include "fibmod/ring.hpp"

namespace fibmod {

/// An element of the free module R^m, stored as its coordinate vector.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(std::vector<Element> coords);
  /// Rank-one element.
  explicit ModuleElement(Element scalar);

  static ModuleElement zero(const Ring& ring, std::size_t rank);

  std::size_t rank() const noexcept { return coords_.size(); }
  const Ring& ring() const { return coords_.front().ring(); }
  const std::vector<Element>& coords() const noexcept { return coords_; }
  const Element& operator[](std::size_t i) const { return coords_[i]; }
  /// The single coordinate of a rank-one element.
  const Element& scalar() const;

  bool is_zero() const;

  ModuleElement operator-() const;
  ModuleElement& operator+=(const ModuleElement& rhs);
  ModuleElement& operator-=(const ModuleElement& rhs);
  ModuleElement& operator*=(const Element& scalar);

  friend ModuleElement operator+(ModuleElement lhs, const ModuleElement& rhs) { return lhs += rhs; }
  friend ModuleElement operator-(ModuleElement lhs, const ModuleElement& rhs) { return lhs -= rhs; }
  friend ModuleElement operator*(const Element& scalar, ModuleElement x) { return x *= scalar; }
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

  /// Kronecker (tensor) product: coordinate (i, j) lands at i * rhs.rank() + j.
  friend ModuleElement kron(const ModuleElement& lhs, const ModuleElement& rhs);
  /// Direct sum: coordinates of lhs followed by those of rhs.
  friend ModuleElement concat(const ModuleElement& lhs, const ModuleElement& rhs);
  ModuleElement project(std::size_t first, std::size_t count) const;

  /// "x" for rank one, "[x, y, ...]" otherwise.
  std::string to_string() const;

 private:
  void require_compatible(const ModuleElement& rhs, const char* op) const;

  std::vector<Element> coords_;
};

ModuleElement kron(const ModuleElement& lhs, const ModuleElement& rhs);
ModuleElement concat(const ModuleElement& lhs, const ModuleElement& rhs);

/// Checks that all entries share one rank and ring; returns that rank.
std::size_t uniform_rank(std::span<const ModuleElement> entries);

}  // namespace fibmod
