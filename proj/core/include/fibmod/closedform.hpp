#pragma once

/**
 * @file closedform.hpp
 * @brief Root-based closed forms for second-order types (r1 + r2, -r1 r2).
 *
 *   R_0^[n] = (r1^n r2 - r1 r2^n) / (r2 - r1),  R_1^[n] = (r2^n - r1^n) / (r2 - r1)
 *   S_0^[n] = r1^n r2 - r1 r2^n,                S_1^[n] = r2^n - r1^n
 *
 * Roots are never computed; a RootPair is supplied and checked against the
 * recurrence coefficients.
 */

#include <cstdint>
#include <vector>

#include "fibmod/genfun.hpp"
#include "fibmod/multiseq.hpp"
#include "fibmod/ring.hpp"

namespace fibmod {

using SignedIndex = std::vector<std::int64_t>;

class RootPair {
 public:
  RootPair(Element r1, Element r2);

  const Element& r1() const noexcept { return r1_; }
  const Element& r2() const noexcept { return r2_; }
  const Ring& ring() const { return r1_.ring(); }
  Element a() const { return r1_ + r2_; }
  Element b() const { return -(r1_ * r2_); }
  Element delta() const { return r2_ - r1_; }
  /// True iff `rec` is (r1 + r2, -r1 r2).
  bool matches(const RecurrenceType& rec) const;
  RecurrenceType recurrence() const;

 private:
  Element r1_, r2_;
};

/// Sum formulas in the roots; R_poly(i, 0) is the delta initial condition.
Element R_poly(int i, std::uint64_t n, const RootPair& roots);

/// Quotient formulas; negative n needs unit roots, all n need a unit delta.
Element R_rational(int i, std::int64_t n, const RootPair& roots);

/// Division-free numerators S_j^[n]; negative n needs unit roots.
Element S_value(int j, std::int64_t n, const RootPair& roots);

/// General term from the initial block and root powers.  With
/// `division_free` the result is delta^p * x_index and no inverse of delta is
/// taken.
ModuleElement term_via_roots(const MultiSequence& mseq, const RootPair& roots, const SignedIndex& index,
                             bool division_free);

/// Generating function with Q_0 = 1 - (r1 + r2) t, Q_1 = t and denominators
/// (1 - r1 t)(1 - r2 t) recorded in factored form.
RationalGF gf_via_roots(const MultiSequence& mseq, const RootPair& roots);

}  // namespace fibmod
