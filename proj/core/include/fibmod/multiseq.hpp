#pragma once

/**
 * @file multiseq.hpp
 * @brief p-dimensional recurrence sequences: an independent linear recurrence
 *        along each axis, determined freely by a d_1 x ... x d_p initial block.
 *
 * Evaluation reduces one axis at a time.  The result does not depend on the
 * order in which axes are reduced; `term_in_order` exposes the order so that
 * this can be checked rather than assumed.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "fibmod/hypercube.hpp"
#include "fibmod/module.hpp"
#include "fibmod/recurrence.hpp"

namespace fibmod {

/// Recurrence types of the p axes.
class FibSpec {
 public:
  explicit FibSpec(std::vector<RecurrenceType> axes);

  std::size_t dims() const noexcept { return axes_.size(); }
  const RecurrenceType& axis(std::size_t i) const { return axes_.at(i); }
  const std::vector<RecurrenceType>& axes() const noexcept { return axes_; }
  Shape orders() const;
  /// d_1 * ... * d_p, the rank of the module of scalar sequences.
  std::size_t rank() const;
  const Ring& ring() const { return axes_.front().ring(); }

  friend bool operator==(const FibSpec&, const FibSpec&) = default;

 private:
  std::vector<RecurrenceType> axes_;
};

using InitialBlock = Hypercube<ModuleElement>;

class MultiSequence {
 public:
  MultiSequence(FibSpec spec, InitialBlock initial);
  /// Rank-one sequence from integer block data in axis-1-fastest order.
  static MultiSequence of(const FibSpec& spec, std::initializer_list<long> block);

  const FibSpec& spec() const noexcept { return spec_; }
  const InitialBlock& initial() const noexcept { return initial_; }
  std::size_t dims() const noexcept { return spec_.dims(); }
  std::size_t rank() const { return initial_[0].rank(); }
  const Ring& ring() const { return spec_.ring(); }

  /// Reduces axes from the highest to the lowest; memoized.
  ModuleElement term(const Index& index) const;
  /// Reduces axes in the given order (a permutation of 0..p-1).
  ModuleElement term_in_order(const Index& index, std::span<const std::size_t> axis_order) const;
  /// Contraction of the initial block with per-axis basis values (companion powers).
  ModuleElement term_fast(const Index& index) const;

  Hypercube<ModuleElement> window(const Index& origin, const Shape& shape) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::map<Index, ModuleElement> terms;
  };

  // With `memo`, seed values of each walk are looked up and stored there.
  ModuleElement reduce(Index& index, std::span<const std::size_t> axis_order,
                       std::map<Index, ModuleElement>* memo) const;

  FibSpec spec_;
  InitialBlock initial_;
  std::shared_ptr<Memo> memo_;
};

/// Shift along `axis` (1-based, H = axis 1, V = axis 2).
MultiSequence shift_axis(const MultiSequence& mseq, std::size_t axis, std::uint64_t count);

/// Phi: (x^(1)_n1 (x) ... (x) x^(p)_np); entry ranks multiply.
MultiSequence tensor_product(std::span<const Sequence1D> factors);

/// Coordinates in the product basis prod_i P_{j_i}^[n_i]; equal to the initial block.
InitialBlock decompose_tensor(const MultiSequence& mseq);

/// Psi: evaluates sum_j prod_i P_{j_i}^[n_i](a^(i)) * block[j] with iteratively
/// computed basis values.
ModuleElement evaluate_product_basis(const FibSpec& spec, const InitialBlock& block, const Index& index);

/// Entrywise concatenation; both sequences must share one spec.
MultiSequence direct_sum(const MultiSequence& a, const MultiSequence& b);
/// Keeps coordinates [first, first + count) of every entry.
MultiSequence project(const MultiSequence& mseq, std::size_t first, std::size_t count);

/// x of type a and y of type c (equal order and rank) combined into one
/// sequence over R x R with coefficients ((a_1, c_1), ..., (a_d, c_d)).
Sequence1D direct_sum_mixed(const Sequence1D& x, const Sequence1D& y);
/// Componentwise projection of a sequence over a product ring (0 = left).
Sequence1D project_component(const Sequence1D& seq, int component);

/// (x_n (x) y_k + x_k (x) y_n) / 2; requires equal types and 2 a unit.
MultiSequence symmetrize(const Sequence1D& x, const Sequence1D& y);
/// (x_n (x) y_k - x_k (x) y_n) / 2.
MultiSequence antisymmetrize(const Sequence1D& x, const Sequence1D& y);

bool is_symmetric(const MultiSequence& mseq, std::uint64_t bound);
bool is_antisymmetric(const MultiSequence& mseq, std::uint64_t bound);

/// Checks ab x_{n,k+3} + (a^2+b)c x_{n+1,k+2} = a(c^2+d) x_{n+2,k+1} + cd x_{n+3,k}
/// for axis types (a,b), (c,d).  Throws HypothesisViolated unless a^2 d = b c^2.
bool diagonal_check(const MultiSequence& mseq, std::uint64_t n, std::uint64_t k);

/// x_{n,k+3} - x_{n+3,k} = 2 (x_{n+2,k+1} - x_{n+1,k+2}) for type (1,1) (x) (1,1).
bool diagonal_identity_fib(const MultiSequence& mseq, std::uint64_t n, std::uint64_t k);

/// True iff every axis recurrence holds at every interior position of `block`.
bool check_membership(const Hypercube<ModuleElement>& block, const FibSpec& spec);

}  // namespace fibmod
