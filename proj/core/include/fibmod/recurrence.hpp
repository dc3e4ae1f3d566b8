#pragma once

/**
 * @file recurrence.hpp
 * @brief Order-d linear recurrences x_{n+d} = a_1 x_{n+d-1} + ... + a_d x_n
 *        with values in a free module over a runtime ring.
 *
 * Two evaluation paths are provided and must agree exactly:
 *   - Sequence1D::term iterates the recurrence and memoizes the prefix;
 *   - Sequence1D::term_fast raises the companion matrix to the n-th power
 *     (O(d^3 log n) ring operations) and contracts with the initial values.
 */

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "fibmod/module.hpp"
#include "fibmod/ring.hpp"

namespace fibmod {

/// Coefficient vector (a_1, ..., a_d) of one recurrence axis.
class RecurrenceType {
 public:
  explicit RecurrenceType(std::vector<Element> coefficients);
  /// Integer coefficients mapped into `ring`.
  static RecurrenceType of(const Ring& ring, std::initializer_list<long> coefficients);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
  const Element& operator[](std::size_t j) const { return coeffs_[j]; }  // a_{j+1}
  const Ring& ring() const { return coeffs_.front().ring(); }

  friend bool operator==(const RecurrenceType&, const RecurrenceType&) = default;

 private:
  std::vector<Element> coeffs_;
};

/// Dense square matrix over a runtime ring.
class SquareMatrix {
 public:
  SquareMatrix(const Ring& ring, std::size_t dim);
  static SquareMatrix identity(const Ring& ring, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Element& operator()(std::size_t r, std::size_t c) { return cells_[r * dim_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return cells_[r * dim_ + c]; }

  friend SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs);
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
  SquareMatrix pow(std::uint64_t exponent) const;

 private:
  Ring ring_;
  std::size_t dim_;
  std::vector<Element> cells_;
};

/// Top row (a_1, ..., a_d), identity on the subdiagonal.  Acting on the state
/// (x_{n+d-1}, ..., x_n) it advances n by one.
SquareMatrix companion_matrix(const RecurrenceType& rec);

/// P_i^[n](a): the n-th term of the scalar sequence with x_j = delta_ij for j < d.
/// Computed by direct iteration.
Element basis_value(const RecurrenceType& rec, std::size_t i, std::uint64_t n);

/// (P_0^[n], ..., P_{d-1}^[n]) read off the companion matrix power C^n.
std::vector<Element> basis_values(const RecurrenceType& rec, std::uint64_t n);

/// A one-dimensional recurrence sequence with module-valued terms.
/// Copies share the memo table; the table is guarded, so concurrent reads
/// produce the same results as sequential ones.
class Sequence1D {
 public:
  Sequence1D(RecurrenceType rec, std::vector<ModuleElement> initial);
  /// Rank-one sequence with integer initial values mapped into the ring.
  static Sequence1D of(const RecurrenceType& rec, std::initializer_list<long> initial);

  const RecurrenceType& recurrence() const noexcept { return rec_; }
  std::size_t order() const noexcept { return rec_.order(); }
  std::size_t rank() const noexcept { return initial_.front().rank(); }
  const Ring& ring() const { return rec_.ring(); }
  const std::vector<ModuleElement>& initial() const noexcept { return initial_; }

  ModuleElement term(std::uint64_t n) const;
  ModuleElement term_fast(std::uint64_t n) const;
  /// Terms [0, count) by iteration.
  std::vector<ModuleElement> prefix(std::size_t count) const;

  /// Entrywise sum of two sequences of the same type.
  friend Sequence1D operator+(const Sequence1D& lhs, const Sequence1D& rhs);

 private:
  struct Memo {
    std::mutex mutex;
    std::vector<ModuleElement> terms;
  };

  RecurrenceType rec_;
  std::vector<ModuleElement> initial_;
  std::shared_ptr<Memo> memo_;
};

/// phi: the coordinates (x_0, ..., x_{d-1}).
std::vector<ModuleElement> decompose(const Sequence1D& seq);

/// psi: the sequence sum_i (P_i^[n])_n (x) coords[i].
Sequence1D reconstruct(const RecurrenceType& rec, std::vector<ModuleElement> coords);

/// The shift T^count.
Sequence1D shift(const Sequence1D& seq, std::uint64_t count);

/// (x_{-1}, ..., x_{-k}); requires a_d to be a unit.
std::vector<ModuleElement> extend_backward(const Sequence1D& seq, std::size_t k);

/// True iff every length-(d+1) sub-window satisfies the recurrence.
bool check_membership(std::span<const ModuleElement> window, const RecurrenceType& rec);

/// One step of the recurrence: sum_j a_{j+1} * window[d-1-j], window holding d
/// consecutive terms in increasing index order.
ModuleElement recurrence_step(const RecurrenceType& rec, std::span<const ModuleElement> window);

}  // namespace fibmod
