#include "fibmod/ring.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace fibmod {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DescriptorMismatch: return "DescriptorMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotInvertibleCoefficient: return "NotInvertibleCoefficient";
    case Errc::TwoNotInvertible: return "TwoNotInvertible";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::AmbiguousAtBound: return "AmbiguousAtBound";
    case Errc::Schema: return "Schema";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Descriptors

Ring RingDescriptor::integer() {
  static const Ring z = std::make_shared<const RingDescriptor>(Token{}, RingKind::Integer);
  return z;
}

Ring RingDescriptor::rational() {
  static const Ring q = std::make_shared<const RingDescriptor>(Token{}, RingKind::Rational);
  return q;
}

Ring RingDescriptor::integers_mod(const mpz_class& modulus) {
  if (modulus < 2) fail(Errc::InvalidArgument, "IntegersMod modulus must be >= 2, got " + modulus.get_str());
  auto r = std::make_shared<RingDescriptor>(Token{}, RingKind::IntegersMod);
  r->modulus_ = modulus;
  return r;
}

Ring RingDescriptor::product(Ring left, Ring right) {
  if (!left || !right) fail(Errc::InvalidArgument, "Product ring needs two factors");
  auto r = std::make_shared<RingDescriptor>(Token{}, RingKind::Product);
  r->left_ = std::move(left);
  r->right_ = std::move(right);
  return r;
}

Ring RingDescriptor::polynomial(Ring base, std::vector<std::string> variables) {
  if (!base) fail(Errc::InvalidArgument, "Polynomial ring needs a base ring");
  if (variables.empty()) fail(Errc::InvalidArgument, "Polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) fail(Errc::InvalidArgument, "Polynomial variable names must be nonempty");
    if (!seen.insert(v).second) fail(Errc::InvalidArgument, "duplicate polynomial variable '" + v + "'");
  }
  auto r = std::make_shared<RingDescriptor>(Token{}, RingKind::Polynomial);
  r->left_ = std::move(base);
  r->variables_ = std::move(variables);
  return r;
}

const mpz_class& RingDescriptor::modulus() const {
  if (kind_ != RingKind::IntegersMod) fail(Errc::InvalidArgument, "modulus() on " + name());
  return modulus_;
}

const Ring& RingDescriptor::left() const {
  if (kind_ != RingKind::Product) fail(Errc::InvalidArgument, "left() on " + name());
  return left_;
}

const Ring& RingDescriptor::right() const {
  if (kind_ != RingKind::Product) fail(Errc::InvalidArgument, "right() on " + name());
  return right_;
}

const Ring& RingDescriptor::base() const {
  if (kind_ != RingKind::Polynomial) fail(Errc::InvalidArgument, "base() on " + name());
  return left_;
}

const std::vector<std::string>& RingDescriptor::variables() const { return variables_; }

std::string RingDescriptor::name() const {
  switch (kind_) {
    case RingKind::Integer: return "Z";
    case RingKind::Rational: return "Q";
    case RingKind::IntegersMod: return "Z/" + modulus_.get_str();
    case RingKind::Product: return "(" + left_->name() + " x " + right_->name() + ")";
    case RingKind::Polynomial: {
      std::string s = left_->name() + "[";
      for (std::size_t i = 0; i < variables_.size(); ++i) s += (i ? "," : "") + variables_[i];
      return s + "]";
    }
  }
  return "?";
}

bool same_ring(const RingDescriptor& x, const RingDescriptor& y) {
  if (&x == &y) return true;
  if (x.kind_ != y.kind_) return false;
  switch (x.kind_) {
    case RingKind::Integer:
    case RingKind::Rational: return true;
    case RingKind::IntegersMod: return x.modulus_ == y.modulus_;
    case RingKind::Product: return same_ring(x.left_, y.left_) && same_ring(x.right_, y.right_);
    case RingKind::Polynomial: return x.variables_ == y.variables_ && same_ring(x.left_, y.left_);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Helpers for the polynomial representation

namespace {

// Merge-adds two canonical term lists.
std::vector<PolyTerm> add_terms(const std::vector<PolyTerm>& a, const std::vector<PolyTerm>& b,
                                bool subtract) {
  std::vector<PolyTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponents < b[j].exponents)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponents < a[i].exponents) {
      out.push_back({b[j].exponents, subtract ? -b[j].coefficient : b[j].coefficient});
      ++j;
    } else {
      Element c = subtract ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!c.is_zero()) out.push_back({a[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

bool simple_scalar(const Element& c) {
  switch (c.kind()) {
    case RingKind::Integer:
    case RingKind::IntegersMod: return true;
    case RingKind::Rational: return c.rational_value().get_den() == 1;
    default: return false;
  }
}

bool negative_scalar(const Element& c) {
  if (c.kind() == RingKind::Integer) return c.integer_value() < 0;
  if (c.kind() == RingKind::Rational) return c.rational_value() < 0;
  return false;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[v];
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s;
}

std::uint32_t degree_of(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Element construction

Element Element::zero(const Ring& ring) { return from_integer(ring, mpz_class(0)); }

Element Element::one(const Ring& ring) { return from_integer(ring, mpz_class(1)); }

Element Element::from_integer(const Ring& ring, const mpz_class& value) {
  switch (ring->kind()) {
    case RingKind::Integer: return Element(ring, value);
    case RingKind::Rational: return Element(ring, mpq_class(value));
    case RingKind::IntegersMod: {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), ring->modulus().get_mpz_t());
      return Element(ring, r);
    }
    case RingKind::Product:
      return Element(ring, Pair{from_integer(ring->left(), value), from_integer(ring->right(), value)});
    case RingKind::Polynomial: {
      Terms terms;
      Element c = from_integer(ring->base(), value);
      if (!c.is_zero()) terms.push_back({Monomial(ring->variable_count(), 0), std::move(c)});
      return Element(ring, std::move(terms));
    }
  }
  fail(Errc::InvalidArgument, "unknown ring kind");
}

Element Element::from_rational(const Ring& ring, const mpq_class& value) {
  if (ring->kind() == RingKind::Rational) {
    mpq_class v = value;
    v.canonicalize();
    return Element(ring, v);
  }
  if (ring->kind() == RingKind::Polynomial) {
    Terms terms;
    Element c = from_rational(ring->base(), value);
    if (!c.is_zero()) terms.push_back({Monomial(ring->variable_count(), 0), std::move(c)});
    return Element(ring, std::move(terms));
  }
  if (value.get_den() == 1) return from_integer(ring, value.get_num());
  // p/q in a ring where q may be a unit (e.g. Z/7).
  auto inv = from_integer(ring, value.get_den()).try_invert();
  if (!inv) fail(Errc::NotInvertible, "denominator " + value.get_den().get_str() + " is not a unit in " + ring->name());
  return from_integer(ring, value.get_num()) * *inv;
}

Element Element::pair(const Ring& product_ring, Element left, Element right) {
  if (product_ring->kind() != RingKind::Product) fail(Errc::InvalidArgument, "pair() needs a Product ring");
  if (!same_ring(left.ring(), product_ring->left()) || !same_ring(right.ring(), product_ring->right()))
    fail(Errc::DescriptorMismatch, "pair components do not match " + product_ring->name());
  return Element(product_ring, Pair{std::move(left), std::move(right)});
}

Element Element::variable(const Ring& poly_ring, std::size_t index) {
  if (poly_ring->kind() != RingKind::Polynomial) fail(Errc::InvalidArgument, "variable() needs a Polynomial ring");
  if (index >= poly_ring->variable_count()) fail(Errc::InvalidArgument, "variable index out of range");
  Monomial m(poly_ring->variable_count(), 0);
  m[index] = 1;
  return Element(poly_ring, Terms{{std::move(m), one(poly_ring->base())}});
}

Element Element::polynomial(const Ring& poly_ring, std::vector<PolyTerm> terms) {
  if (poly_ring->kind() != RingKind::Polynomial) fail(Errc::InvalidArgument, "polynomial() needs a Polynomial ring");
  std::map<Monomial, Element> acc;
  for (auto& t : terms) {
    if (t.exponents.size() != poly_ring->variable_count())
      fail(Errc::InvalidArgument, "monomial arity does not match " + poly_ring->name());
    if (!same_ring(t.coefficient.ring(), poly_ring->base()))
      fail(Errc::DescriptorMismatch, "coefficient ring does not match " + poly_ring->name());
    auto it = acc.find(t.exponents);
    if (it == acc.end()) {
      acc.emplace(std::move(t.exponents), std::move(t.coefficient));
    } else {
      it->second += t.coefficient;
    }
  }
  Terms out;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, c});
  return Element(poly_ring, std::move(out));
}

// ---------------------------------------------------------------------------
// Predicates and accessors

bool Element::is_zero() const {
  switch (kind()) {
    case RingKind::Integer:
    case RingKind::IntegersMod: return std::get<mpz_class>(value_) == 0;
    case RingKind::Rational: return std::get<mpq_class>(value_) == 0;
    case RingKind::Product: {
      const auto& p = std::get<Pair>(value_);
      return p[0].is_zero() && p[1].is_zero();
    }
    case RingKind::Polynomial: return std::get<Terms>(value_).empty();
  }
  return false;
}

bool Element::is_one() const { return *this == one(ring_); }

bool Element::is_nilpotent() const {
  switch (kind()) {
    case RingKind::Integer:
    case RingKind::Rational: return is_zero();
    case RingKind::IntegersMod: {
      // Every prime power dividing m has exponent <= log2(m).
      auto bits = mpz_sizeinbase(ring_->modulus().get_mpz_t(), 2);
      return pow(bits).is_zero();
    }
    case RingKind::Product: return first().is_nilpotent() && second().is_nilpotent();
    case RingKind::Polynomial:
      return std::all_of(terms().begin(), terms().end(),
                         [](const PolyTerm& t) { return t.coefficient.is_nilpotent(); });
  }
  return false;
}

const mpz_class& Element::integer_value() const {
  if (kind() != RingKind::Integer && kind() != RingKind::IntegersMod)
    fail(Errc::InvalidArgument, "integer_value() on element of " + ring_->name());
  return std::get<mpz_class>(value_);
}

const mpq_class& Element::rational_value() const {
  if (kind() != RingKind::Rational) fail(Errc::InvalidArgument, "rational_value() on element of " + ring_->name());
  return std::get<mpq_class>(value_);
}

const Element& Element::first() const {
  if (kind() != RingKind::Product) fail(Errc::InvalidArgument, "first() on element of " + ring_->name());
  return std::get<Pair>(value_)[0];
}

const Element& Element::second() const {
  if (kind() != RingKind::Product) fail(Errc::InvalidArgument, "second() on element of " + ring_->name());
  return std::get<Pair>(value_)[1];
}

const std::vector<PolyTerm>& Element::terms() const {
  if (kind() != RingKind::Polynomial) fail(Errc::InvalidArgument, "terms() on element of " + ring_->name());
  return std::get<Terms>(value_);
}

Element Element::coefficient(const Monomial& monomial) const {
  const auto& ts = terms();
  auto it = std::lower_bound(ts.begin(), ts.end(), monomial,
                             [](const PolyTerm& t, const Monomial& m) { return t.exponents < m; });
  if (it != ts.end() && it->exponents == monomial) return it->coefficient;
  return zero(ring_->base());
}

int Element::total_degree() const {
  int d = -1;
  for (const auto& t : terms()) d = std::max(d, static_cast<int>(degree_of(t.exponents)));
  return d;
}

// ---------------------------------------------------------------------------
// Arithmetic

void Element::require_same_ring(const Element& other, const char* op) const {
  if (!same_ring(ring_, other.ring_))
    fail(Errc::DescriptorMismatch,
         std::string("cannot ") + op + " elements of " + ring_->name() + " and " + other.ring_->name());
}

Element Element::operator-() const {
  switch (kind()) {
    case RingKind::Integer: return Element(ring_, mpz_class(-std::get<mpz_class>(value_)));
    case RingKind::Rational: return Element(ring_, mpq_class(-std::get<mpq_class>(value_)));
    case RingKind::IntegersMod: {
      const auto& v = std::get<mpz_class>(value_);
      return Element(ring_, v == 0 ? mpz_class(0) : mpz_class(ring_->modulus() - v));
    }
    case RingKind::Product: return Element(ring_, Pair{-first(), -second()});
    case RingKind::Polynomial: {
      Terms out = terms();
      for (auto& t : out) t.coefficient = -t.coefficient;
      return Element(ring_, std::move(out));
    }
  }
  return *this;
}

Element& Element::operator+=(const Element& rhs) {
  require_same_ring(rhs, "add");
  switch (kind()) {
    case RingKind::Integer: std::get<mpz_class>(value_) += std::get<mpz_class>(rhs.value_); break;
    case RingKind::Rational: std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_); break;
    case RingKind::IntegersMod: {
      auto& v = std::get<mpz_class>(value_);
      v += std::get<mpz_class>(rhs.value_);
      if (v >= ring_->modulus()) v -= ring_->modulus();
      break;
    }
    case RingKind::Product: {
      auto& p = std::get<Pair>(value_);
      p[0] += rhs.first();
      p[1] += rhs.second();
      break;
    }
    case RingKind::Polynomial: value_ = add_terms(terms(), rhs.terms(), false); break;
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_ring(rhs, "subtract");
  switch (kind()) {
    case RingKind::Integer: std::get<mpz_class>(value_) -= std::get<mpz_class>(rhs.value_); break;
    case RingKind::Rational: std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_); break;
    case RingKind::IntegersMod: {
      auto& v = std::get<mpz_class>(value_);
      v -= std::get<mpz_class>(rhs.value_);
      if (v < 0) v += ring_->modulus();
      break;
    }
    case RingKind::Product: {
      auto& p = std::get<Pair>(value_);
      p[0] -= rhs.first();
      p[1] -= rhs.second();
      break;
    }
    case RingKind::Polynomial: value_ = add_terms(terms(), rhs.terms(), true); break;
  }
  return *this;
}

Element operator*(const Element& lhs, const Element& rhs) {
  lhs.require_same_ring(rhs, "multiply");
  const Ring& ring = lhs.ring_;
  switch (lhs.kind()) {
    case RingKind::Integer:
      return Element(ring, mpz_class(std::get<mpz_class>(lhs.value_) * std::get<mpz_class>(rhs.value_)));
    case RingKind::Rational:
      return Element(ring, mpq_class(std::get<mpq_class>(lhs.value_) * std::get<mpq_class>(rhs.value_)));
    case RingKind::IntegersMod: {
      mpz_class r = std::get<mpz_class>(lhs.value_) * std::get<mpz_class>(rhs.value_);
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), ring->modulus().get_mpz_t());
      return Element(ring, std::move(r));
    }
    case RingKind::Product:
      return Element(ring, Element::Pair{lhs.first() * rhs.first(), lhs.second() * rhs.second()});
    case RingKind::Polynomial: {
      const auto& a = lhs.terms();
      const auto& b = rhs.terms();
      if (a.empty() || b.empty()) return Element::zero(ring);
      std::map<Monomial, Element> acc;
      Monomial m(ring->variable_count());
      for (const auto& ta : a) {
        for (const auto& tb : b) {
          for (std::size_t v = 0; v < m.size(); ++v) m[v] = ta.exponents[v] + tb.exponents[v];
          Element c = ta.coefficient * tb.coefficient;
          auto it = acc.find(m);
          if (it == acc.end()) {
            acc.emplace(m, std::move(c));
          } else {
            it->second += c;
          }
        }
      }
      Element::Terms out;
      out.reserve(acc.size());
      for (auto& [mono, c] : acc)
        if (!c.is_zero()) out.push_back({mono, std::move(c)});
      return Element(ring, std::move(out));
    }
  }
  fail(Errc::InvalidArgument, "unknown ring kind");
}

Element& Element::operator*=(const Element& rhs) { return *this = *this * rhs; }

bool operator==(const Element& lhs, const Element& rhs) {
  if (!same_ring(lhs.ring_, rhs.ring_)) return false;
  return lhs.value_ == rhs.value_;
}

Element Element::pow(std::uint64_t exponent) const {
  Element result = one(ring_);
  Element base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::optional<Element> Element::try_invert() const {
  switch (kind()) {
    case RingKind::Integer: {
      const auto& v = std::get<mpz_class>(value_);
      if (v == 1 || v == -1) return *this;
      return std::nullopt;
    }
    case RingKind::Rational: {
      const auto& v = std::get<mpq_class>(value_);
      if (v == 0) return std::nullopt;
      return Element(ring_, mpq_class(1 / v));
    }
    case RingKind::IntegersMod: {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), std::get<mpz_class>(value_).get_mpz_t(), ring_->modulus().get_mpz_t()) == 0)
        return std::nullopt;
      return Element(ring_, std::move(inv));
    }
    case RingKind::Product: {
      auto l = first().try_invert();
      auto r = second().try_invert();
      if (!l || !r) return std::nullopt;
      return Element(ring_, Pair{std::move(*l), std::move(*r)});
    }
    case RingKind::Polynomial: {
      // Units of B[x] are u + N with u a unit of B and N nilpotent.
      const Monomial constant(ring_->variable_count(), 0);
      auto c_inv = coefficient(constant).try_invert();
      if (!c_inv) return std::nullopt;
      Element c_inv_poly = Element(ring_, Terms{{constant, *c_inv}});
      Element nil = one(ring_) - c_inv_poly * *this;  // 1 - c^{-1} p
      if (!nil.is_nilpotent()) return std::nullopt;
      // (1 - N)^{-1} = 1 + N + N^2 + ... ; terminates since N is nilpotent.
      Element sum = one(ring_);
      Element power = nil;
      while (!power.is_zero()) {
        sum += power;
        power *= nil;
      }
      return sum * c_inv_poly;
    }
  }
  return std::nullopt;
}

Element Element::eval(std::span<const Element> values) const {
  const auto& ts = terms();
  const Ring& base = ring_->base();
  if (values.size() != ring_->variable_count())
    fail(Errc::InvalidArgument, "eval on " + ring_->name() + " expects " +
                                    std::to_string(ring_->variable_count()) + " values, got " +
                                    std::to_string(values.size()));
  for (const auto& v : values)
    if (!same_ring(v.ring(), base)) fail(Errc::DescriptorMismatch, "eval value not in " + base->name());
  Element result = zero(base);
  for (const auto& t : ts) {
    Element term = t.coefficient;
    for (std::size_t v = 0; v < values.size(); ++v)
      if (t.exponents[v] > 0) term *= values[v].pow(t.exponents[v]);
    result += term;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Printing

std::string Element::to_string() const {
  switch (kind()) {
    case RingKind::Integer:
    case RingKind::IntegersMod: return std::get<mpz_class>(value_).get_str();
    case RingKind::Rational: return std::get<mpq_class>(value_).get_str();
    case RingKind::Product: return "(" + first().to_string() + ", " + second().to_string() + ")";
    case RingKind::Polynomial: {
      const auto& ts = terms();
      if (ts.empty()) return "0";
      // Ascending total degree; within a degree, earlier variables first.
      std::vector<const PolyTerm*> order;
      for (const auto& t : ts) order.push_back(&t);
      std::stable_sort(order.begin(), order.end(), [](const PolyTerm* x, const PolyTerm* y) {
        auto dx = degree_of(x->exponents), dy = degree_of(y->exponents);
        if (dx != dy) return dx < dy;
        return x->exponents > y->exponents;
      });
      std::string out;
      for (const PolyTerm* t : order) {
        const bool first_term = out.empty();
        const std::string mono = monomial_string(t->exponents, ring_->variables());
        Element c = t->coefficient;
        bool negative = negative_scalar(c);
        if (negative) c = -c;
        std::string body;
        if (mono.empty()) {
          body = c.to_string();
          if (!simple_scalar(c) && c.kind() == RingKind::Polynomial && c.terms().size() > 1) body = "(" + body + ")";
        } else if (c.is_one()) {
          body = mono;
        } else if (simple_scalar(c)) {
          body = c.to_string() + mono;
        } else {
          body = "(" + c.to_string() + ")*" + mono;
        }
        if (first_term) {
          out = negative ? "-" + body : body;
        } else {
          out += negative ? " - " : " + ";
          out += body;
        }
      }
      return out;
    }
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.to_string(); }

Element ring_arith(ArithOp op, const Element& x, const Element* y) {
  if (op == ArithOp::Neg) return -x;
  if (y == nullptr) fail(Errc::InvalidArgument, "binary ring operation needs two operands");
  switch (op) {
    case ArithOp::Add: return x + *y;
    case ArithOp::Sub: return x - *y;
    case ArithOp::Mul: return x * *y;
    case ArithOp::Neg: break;
  }
  return -x;
}

}  // namespace fibmod
