#include "fibmod/multiseq.hpp"

#include <numeric>

namespace fibmod {

FibSpec::FibSpec(std::vector<RecurrenceType> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) fail(Errc::InvalidArgument, "a spec needs at least one axis");
  for (const auto& a : axes_)
    if (!same_ring(a.ring(), axes_.front().ring()))
      fail(Errc::DescriptorMismatch, "all axes must share one coefficient ring");
}

Shape FibSpec::orders() const {
  Shape s;
  for (const auto& a : axes_) s.push_back(a.order());
  return s;
}

std::size_t FibSpec::rank() const { return Hypercube<int>::volume(orders()); }

// ---------------------------------------------------------------------------

MultiSequence::MultiSequence(FibSpec spec, InitialBlock initial)
    : spec_(std::move(spec)), initial_(std::move(initial)), memo_(std::make_shared<Memo>()) {
  if (initial_.shape() != spec_.orders())
    fail(Errc::InvalidArgument, "initial block shape does not match the axis orders");
  uniform_rank(initial_.data());
  if (!same_ring(initial_[0].ring(), spec_.ring()))
    fail(Errc::DescriptorMismatch, "initial block and coefficients live in different rings");
}

MultiSequence MultiSequence::of(const FibSpec& spec, std::initializer_list<long> block) {
  std::vector<ModuleElement> data;
  for (long v : block) data.emplace_back(Element::from_integer(spec.ring(), v));
  return MultiSequence(spec, InitialBlock(spec.orders(), std::move(data)));
}

ModuleElement MultiSequence::reduce(Index& index, std::span<const std::size_t> axis_order,
                                    std::map<Index, ModuleElement>* memo) const {
  for (std::size_t pos = 0; pos < axis_order.size(); ++pos) {
    const std::size_t axis = axis_order[pos];
    const RecurrenceType& rec = spec_.axis(axis);
    const std::size_t d = rec.order();
    const std::uint64_t target = index[axis];
    if (target < d) continue;
    // Walk along `axis` from the d seed positions, each reduced recursively.
    std::vector<ModuleElement> window;
    window.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
      index[axis] = j;
      if (memo) {
        if (auto it = memo->find(index); it != memo->end()) {
          window.push_back(it->second);
          continue;
        }
      }
      window.push_back(reduce(index, axis_order, memo));
      if (memo) memo->emplace(index, window.back());
    }
    for (std::uint64_t m = d; m <= target; ++m) {
      ModuleElement next = recurrence_step(rec, window);
      window.erase(window.begin());
      window.push_back(std::move(next));
    }
    index[axis] = target;
    return window.back();
  }
  return initial_.at(index);
}

ModuleElement MultiSequence::term_in_order(const Index& index, std::span<const std::size_t> axis_order) const {
  if (index.size() != dims()) fail(Errc::InvalidArgument, "index dimension does not match the spec");
  std::vector<bool> seen(dims(), false);
  if (axis_order.size() != dims()) fail(Errc::InvalidArgument, "axis order must be a permutation of all axes");
  for (auto a : axis_order) {
    if (a >= dims() || seen[a]) fail(Errc::InvalidArgument, "axis order must be a permutation of all axes");
    seen[a] = true;
  }
  Index scratch = index;
  return reduce(scratch, axis_order, nullptr);
}

ModuleElement MultiSequence::term(const Index& index) const {
  if (index.size() != dims()) fail(Errc::InvalidArgument, "index dimension does not match the spec");
  std::lock_guard lock(memo_->mutex);
  if (auto it = memo_->terms.find(index); it != memo_->terms.end()) return it->second;
  std::vector<std::size_t> order(dims());
  std::iota(order.rbegin(), order.rend(), std::size_t{0});
  Index scratch = index;
  ModuleElement value = reduce(scratch, order, &memo_->terms);
  memo_->terms.emplace(index, value);
  return value;
}

ModuleElement MultiSequence::term_fast(const Index& index) const {
  if (index.size() != dims()) fail(Errc::InvalidArgument, "index dimension does not match the spec");
  std::vector<std::vector<Element>> basis;
  basis.reserve(dims());
  for (std::size_t i = 0; i < dims(); ++i) basis.push_back(basis_values(spec_.axis(i), index[i]));
  ModuleElement out = ModuleElement::zero(ring(), rank());
  for (std::size_t flat = 0; flat < initial_.size(); ++flat) {
    const Index j = initial_.unravel(flat);
    Element weight = basis[0][j[0]];
    for (std::size_t i = 1; i < dims(); ++i) weight *= basis[i][j[i]];
    if (!weight.is_zero()) out += weight * initial_[flat];
  }
  return out;
}

Hypercube<ModuleElement> MultiSequence::window(const Index& origin, const Shape& shape) const {
  if (origin.size() != dims() || shape.size() != dims())
    fail(Errc::InvalidArgument, "window origin/shape dimension does not match the spec");
  return Hypercube<ModuleElement>::generate(shape, [&](const Index& offset) {
    Index idx(dims());
    for (std::size_t i = 0; i < dims(); ++i) idx[i] = origin[i] + offset[i];
    return term(idx);
  });
}

// ---------------------------------------------------------------------------

MultiSequence shift_axis(const MultiSequence& mseq, std::size_t axis, std::uint64_t count) {
  if (axis < 1 || axis > mseq.dims())
    fail(Errc::InvalidArgument, "axis " + std::to_string(axis) + " out of range 1.." + std::to_string(mseq.dims()));
  Index origin(mseq.dims(), 0);
  origin[axis - 1] = count;
  return MultiSequence(mseq.spec(), mseq.window(origin, mseq.spec().orders()));
}

MultiSequence tensor_product(std::span<const Sequence1D> factors) {
  if (factors.empty()) fail(Errc::InvalidArgument, "tensor product needs at least one factor");
  std::vector<RecurrenceType> axes;
  for (const auto& f : factors) {
    if (!same_ring(f.ring(), factors.front().ring()))
      fail(Errc::DescriptorMismatch, "tensor factors live in different rings");
    axes.push_back(f.recurrence());
  }
  FibSpec spec(std::move(axes));
  auto block = InitialBlock::generate(spec.orders(), [&](const Index& j) {
    ModuleElement e = factors[0].initial()[j[0]];
    for (std::size_t i = 1; i < factors.size(); ++i) e = kron(e, factors[i].initial()[j[i]]);
    return e;
  });
  return MultiSequence(std::move(spec), std::move(block));
}

InitialBlock decompose_tensor(const MultiSequence& mseq) {
  return mseq.window(Index(mseq.dims(), 0), mseq.spec().orders());
}

ModuleElement evaluate_product_basis(const FibSpec& spec, const InitialBlock& block, const Index& index) {
  if (block.shape() != spec.orders()) fail(Errc::InvalidArgument, "block shape does not match the spec");
  if (index.size() != spec.dims()) fail(Errc::InvalidArgument, "index dimension does not match the spec");
  ModuleElement out = ModuleElement::zero(spec.ring(), block[0].rank());
  for (std::size_t flat = 0; flat < block.size(); ++flat) {
    const Index j = block.unravel(flat);
    Element weight = Element::one(spec.ring());
    for (std::size_t i = 0; i < spec.dims(); ++i) weight *= basis_value(spec.axis(i), j[i], index[i]);
    out += weight * block[flat];
  }
  return out;
}

namespace {

InitialBlock map_block(const InitialBlock& block, const std::function<ModuleElement(const ModuleElement&)>& fn) {
  std::vector<ModuleElement> data;
  data.reserve(block.size());
  for (const auto& e : block.data()) data.push_back(fn(e));
  return InitialBlock(block.shape(), std::move(data));
}

Element inverse_of_two(const Ring& ring) {
  auto inv = Element::from_integer(ring, 2).try_invert();
  if (!inv) fail(Errc::TwoNotInvertible, "2 is not a unit in " + ring->name());
  return *inv;
}

MultiSequence symmetric_part(const Sequence1D& x, const Sequence1D& y, bool anti) {
  if (!(x.recurrence() == y.recurrence()))
    fail(Errc::SpecMismatch, "symmetric and exterior squares need factors of one type");
  if (x.rank() != y.rank()) fail(Errc::SpecMismatch, "symmetric and exterior squares need factors of equal rank");
  const Element half = inverse_of_two(x.ring());
  FibSpec spec(std::vector<RecurrenceType>{x.recurrence(), x.recurrence()});
  auto block = InitialBlock::generate(spec.orders(), [&](const Index& j) {
    ModuleElement straight = kron(x.initial()[j[0]], y.initial()[j[1]]);
    ModuleElement swapped = kron(x.initial()[j[1]], y.initial()[j[0]]);
    return half * (anti ? straight - swapped : straight + swapped);
  });
  return MultiSequence(std::move(spec), std::move(block));
}

bool check_swap(const MultiSequence& mseq, std::uint64_t bound, bool anti) {
  if (mseq.dims() != 2) fail(Errc::InvalidArgument, "symmetry predicates need a two-axis sequence");
  if (!(mseq.spec().axis(0) == mseq.spec().axis(1)))
    fail(Errc::SpecMismatch, "symmetry predicates need both axes of one type");
  for (std::uint64_t n = 0; n <= bound; ++n) {
    for (std::uint64_t k = n; k <= bound; ++k) {
      const ModuleElement a = mseq.term({n, k});
      const ModuleElement b = mseq.term({k, n});
      if (!(anti ? a == -b : a == b)) return false;
    }
  }
  return true;
}

struct TwoByTwo {
  Element a, b, c, d;
};

TwoByTwo second_order_pair(const MultiSequence& mseq, const char* what) {
  if (mseq.dims() != 2 || mseq.spec().axis(0).order() != 2 || mseq.spec().axis(1).order() != 2)
    fail(Errc::SpecMismatch, std::string(what) + " needs two axes of order 2");
  const auto& h = mseq.spec().axis(0);
  const auto& v = mseq.spec().axis(1);
  return {h[0], h[1], v[0], v[1]};
}

}  // namespace

MultiSequence direct_sum(const MultiSequence& a, const MultiSequence& b) {
  if (!(a.spec() == b.spec())) fail(Errc::SpecMismatch, "direct sum needs identical specs");
  std::vector<ModuleElement> data;
  for (std::size_t i = 0; i < a.initial().size(); ++i) data.push_back(concat(a.initial()[i], b.initial()[i]));
  return MultiSequence(a.spec(), InitialBlock(a.spec().orders(), std::move(data)));
}

MultiSequence project(const MultiSequence& mseq, std::size_t first, std::size_t count) {
  return MultiSequence(mseq.spec(),
                       map_block(mseq.initial(), [&](const ModuleElement& e) { return e.project(first, count); }));
}

Sequence1D direct_sum_mixed(const Sequence1D& x, const Sequence1D& y) {
  if (!same_ring(x.ring(), y.ring())) fail(Errc::DescriptorMismatch, "mixed direct sum needs one base ring");
  if (x.order() != y.order()) fail(Errc::SpecMismatch, "mixed direct sum needs recurrences of equal order");
  if (x.rank() != y.rank()) fail(Errc::SpecMismatch, "mixed direct sum needs entries of equal rank");
  const Ring product = RingDescriptor::product(x.ring(), x.ring());
  std::vector<Element> coeffs;
  for (std::size_t j = 0; j < x.order(); ++j)
    coeffs.push_back(Element::pair(product, x.recurrence()[j], y.recurrence()[j]));
  std::vector<ModuleElement> init;
  for (std::size_t j = 0; j < x.order(); ++j) {
    std::vector<Element> coords;
    for (std::size_t c = 0; c < x.rank(); ++c)
      coords.push_back(Element::pair(product, x.initial()[j][c], y.initial()[j][c]));
    init.emplace_back(std::move(coords));
  }
  return Sequence1D(RecurrenceType(std::move(coeffs)), std::move(init));
}

Sequence1D project_component(const Sequence1D& seq, int component) {
  if (seq.ring()->kind() != RingKind::Product) fail(Errc::InvalidArgument, "component projection needs a product ring");
  auto pick = [component](const Element& e) { return component == 0 ? e.first() : e.second(); };
  std::vector<Element> coeffs;
  for (const auto& c : seq.recurrence().coefficients()) coeffs.push_back(pick(c));
  std::vector<ModuleElement> init;
  for (const auto& x : seq.initial()) {
    std::vector<Element> coords;
    for (const auto& c : x.coords()) coords.push_back(pick(c));
    init.emplace_back(std::move(coords));
  }
  return Sequence1D(RecurrenceType(std::move(coeffs)), std::move(init));
}

MultiSequence symmetrize(const Sequence1D& x, const Sequence1D& y) { return symmetric_part(x, y, false); }

MultiSequence antisymmetrize(const Sequence1D& x, const Sequence1D& y) { return symmetric_part(x, y, true); }

bool is_symmetric(const MultiSequence& mseq, std::uint64_t bound) { return check_swap(mseq, bound, false); }

bool is_antisymmetric(const MultiSequence& mseq, std::uint64_t bound) { return check_swap(mseq, bound, true); }

bool diagonal_check(const MultiSequence& mseq, std::uint64_t n, std::uint64_t k) {
  const auto [a, b, c, d] = second_order_pair(mseq, "the diagonal property");
  if (!(a * a * d == b * c * c))
    fail(Errc::HypothesisViolated, "a^2 d = " + (a * a * d).to_string() + " differs from b c^2 = " +
                                       (b * c * c).to_string());
  const ModuleElement lhs = (a * b) * mseq.term({n, k + 3}) + ((a * a + b) * c) * mseq.term({n + 1, k + 2});
  const ModuleElement rhs = (a * (c * c + d)) * mseq.term({n + 2, k + 1}) + (c * d) * mseq.term({n + 3, k});
  return lhs == rhs;
}

bool diagonal_identity_fib(const MultiSequence& mseq, std::uint64_t n, std::uint64_t k) {
  const auto [a, b, c, d] = second_order_pair(mseq, "the Fibonacci diagonal identity");
  const Element one = Element::one(mseq.ring());
  if (!(a == one && b == one && c == one && d == one))
    fail(Errc::SpecMismatch, "the Fibonacci diagonal identity needs type (1,1) on both axes");
  const Element two = Element::from_integer(mseq.ring(), 2);
  return mseq.term({n, k + 3}) - mseq.term({n + 3, k}) ==
         two * (mseq.term({n + 2, k + 1}) - mseq.term({n + 1, k + 2}));
}

bool check_membership(const Hypercube<ModuleElement>& block, const FibSpec& spec) {
  if (block.dims() != spec.dims()) fail(Errc::InvalidArgument, "block dimension does not match the spec");
  for (std::size_t axis = 0; axis < spec.dims(); ++axis)
    if (block.shape()[axis] < spec.axis(axis).order() + 1)
      fail(Errc::InvalidArgument, "block too small along axis " + std::to_string(axis + 1));
  for (std::size_t flat = 0; flat < block.size(); ++flat) {
    const Index idx = block.unravel(flat);
    for (std::size_t axis = 0; axis < spec.dims(); ++axis) {
      const RecurrenceType& rec = spec.axis(axis);
      const std::size_t d = rec.order();
      if (idx[axis] + d >= block.shape()[axis]) continue;
      std::vector<ModuleElement> window;
      Index probe = idx;
      for (std::size_t j = 0; j < d; ++j) {
        probe[axis] = idx[axis] + j;
        window.push_back(block.at(probe));
      }
      probe[axis] = idx[axis] + d;
      if (!(recurrence_step(rec, window) == block.at(probe))) return false;
    }
  }
  return true;
}

}  // namespace fibmod
