#pragma once

/**
 * @file ring.hpp
 * @brief Runtime-described exact commutative rings.
 *
 * A ring is chosen at runtime (typically from a JSON spec), so elements carry
 * a shared, immutable descriptor.  Supported rings:
 *
 *   Integer            arbitrary precision Z
 *   Rational           Q, always stored reduced with positive denominator
 *   IntegersMod(m)     Z/mZ, canonical residues in [0, m)
 *   Product(L, R)      L x R with componentwise operations
 *   Polynomial(B, xs)  B[x_1, ..., x_k], sparse with no stored zero terms
 *
 * Every element value is kept in canonical form, so operator== is structural.
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "fibmod/error.hpp"

namespace fibmod {

enum class RingKind { Integer, Rational, IntegersMod, Product, Polynomial };

class RingDescriptor;
using Ring = std::shared_ptr<const RingDescriptor>;

class RingDescriptor {
 public:
  static Ring integer();
  static Ring rational();
  static Ring integers_mod(const mpz_class& modulus);
  static Ring product(Ring left, Ring right);
  static Ring polynomial(Ring base, std::vector<std::string> variables);

  RingKind kind() const noexcept { return kind_; }
  const mpz_class& modulus() const;
  const Ring& left() const;
  const Ring& right() const;
  const Ring& base() const;
  const std::vector<std::string>& variables() const;
  std::size_t variable_count() const { return variables_.size(); }

  /// Short human-readable name, e.g. "Z", "Z/7", "(Z x Q)", "Z[T,U]".
  std::string name() const;

  friend bool same_ring(const RingDescriptor& x, const RingDescriptor& y);

  struct Token {};
  explicit RingDescriptor(Token, RingKind kind) : kind_(kind) {}

 private:
  RingKind kind_;
  mpz_class modulus_;
  Ring left_, right_;
  std::vector<std::string> variables_;
};

bool same_ring(const RingDescriptor& x, const RingDescriptor& y);
inline bool same_ring(const Ring& x, const Ring& y) { return x == y || same_ring(*x, *y); }

using Monomial = std::vector<std::uint32_t>;
struct PolyTerm;

/// An element of a runtime-described ring.  Immutable value type.
class Element {
 public:
  static Element zero(const Ring& ring);
  static Element one(const Ring& ring);
  /// Image of an integer under the canonical map Z -> ring.
  static Element from_integer(const Ring& ring, const mpz_class& value);
  static Element from_integer(const Ring& ring, long value) {
    return from_integer(ring, mpz_class(value));
  }
  /// Rational value; the ring must be Rational (or a polynomial ring over it).
  static Element from_rational(const Ring& ring, const mpq_class& value);
  static Element pair(const Ring& product_ring, Element left, Element right);
  /// The generator x_i of a polynomial ring.
  static Element variable(const Ring& poly_ring, std::size_t index);
  /// Builds a polynomial from (monomial, coefficient) terms; merges duplicates
  /// and drops zeros.
  static Element polynomial(const Ring& poly_ring, std::vector<PolyTerm> terms);

  const Ring& ring() const noexcept { return ring_; }
  RingKind kind() const noexcept { return ring_->kind(); }

  bool is_zero() const;
  bool is_one() const;
  /// True if some power of this element is zero.
  bool is_nilpotent() const;

  /// Multiplicative inverse, or nullopt when this element is not a unit.
  std::optional<Element> try_invert() const;
  Element pow(std::uint64_t exponent) const;

  // Accessors; each requires the matching ring kind.
  const mpz_class& integer_value() const;   // Integer and IntegersMod
  const mpq_class& rational_value() const;  // Rational
  const Element& first() const;             // Product
  const Element& second() const;            // Product
  const std::vector<PolyTerm>& terms() const;  // Polynomial

  /// Polynomial evaluation: substitutes one base-ring element per variable.
  Element eval(std::span<const Element> values) const;
  /// Polynomial: coefficient of the given monomial (zero if absent).
  Element coefficient(const Monomial& monomial) const;
  /// Polynomial: maximum total degree, or -1 for the zero polynomial.
  int total_degree() const;

  std::string to_string() const;

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(const Element& lhs, const Element& rhs);
  friend bool operator==(const Element& lhs, const Element& rhs);

 private:
  using Pair = std::vector<Element>;
  using Terms = std::vector<PolyTerm>;
  using Value = std::variant<mpz_class, mpq_class, Pair, Terms>;

  Element(Ring ring, Value value) : ring_(std::move(ring)), value_(std::move(value)) {}

  void require_same_ring(const Element& other, const char* op) const;

  Ring ring_;
  Value value_;
};

struct PolyTerm {
  Monomial exponents;
  Element coefficient;

  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

std::ostream& operator<<(std::ostream& os, const Element& x);

/// Operation selector for callers that dispatch on a runtime op name.
enum class ArithOp { Add, Sub, Mul, Neg };
Element ring_arith(ArithOp op, const Element& x, const Element* y = nullptr);

}  // namespace fibmod
