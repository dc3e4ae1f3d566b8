#include "fibmod/recurrence.hpp"

namespace fibmod {

RecurrenceType::RecurrenceType(std::vector<Element> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) fail(Errc::InvalidArgument, "recurrence order must be >= 1");
  for (const auto& c : coeffs_)
    if (!same_ring(c.ring(), coeffs_.front().ring()))
      fail(Errc::DescriptorMismatch, "recurrence coefficients must share one ring");
}

RecurrenceType RecurrenceType::of(const Ring& ring, std::initializer_list<long> coefficients) {
  std::vector<Element> cs;
  for (long c : coefficients) cs.push_back(Element::from_integer(ring, c));
  return RecurrenceType(std::move(cs));
}

// ---------------------------------------------------------------------------

SquareMatrix::SquareMatrix(const Ring& ring, std::size_t dim)
    : ring_(ring), dim_(dim), cells_(dim * dim, Element::zero(ring)) {}

SquareMatrix SquareMatrix::identity(const Ring& ring, std::size_t dim) {
  SquareMatrix m(ring, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Element::one(ring);
  return m;
}

SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs) {
  const std::size_t d = lhs.dim_;
  SquareMatrix out(lhs.ring_, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Element& l = lhs(i, k);
      if (l.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += l * rhs(k, j);
    }
  }
  return out;
}

SquareMatrix SquareMatrix::pow(std::uint64_t exponent) const {
  SquareMatrix result = identity(ring_, dim_);
  SquareMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

SquareMatrix companion_matrix(const RecurrenceType& rec) {
  const std::size_t d = rec.order();
  SquareMatrix m(rec.ring(), d);
  for (std::size_t j = 0; j < d; ++j) m(0, j) = rec[j];
  for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = Element::one(rec.ring());
  return m;
}

// ---------------------------------------------------------------------------

ModuleElement recurrence_step(const RecurrenceType& rec, std::span<const ModuleElement> window) {
  const std::size_t d = rec.order();
  ModuleElement next = rec[0] * window[d - 1];
  for (std::size_t j = 1; j < d; ++j) next += rec[j] * window[d - 1 - j];
  return next;
}

Element basis_value(const RecurrenceType& rec, std::size_t i, std::uint64_t n) {
  const std::size_t d = rec.order();
  if (i >= d) fail(Errc::InvalidArgument, "basis index " + std::to_string(i) + " out of range for order " + std::to_string(d));
  const Ring& ring = rec.ring();
  if (n < d) return n == i ? Element::one(ring) : Element::zero(ring);
  // Rolling window of the last d values.
  std::vector<Element> window(d, Element::zero(ring));
  window[i] = Element::one(ring);
  for (std::uint64_t m = d; m <= n; ++m) {
    Element next = Element::zero(ring);
    for (std::size_t j = 0; j < d; ++j) next += rec[j] * window[d - 1 - j];
    window.erase(window.begin());
    window.push_back(std::move(next));
  }
  return window.back();
}

std::vector<Element> basis_values(const RecurrenceType& rec, std::uint64_t n) {
  // With state s_n = (x_{n+d-1}, ..., x_n) = C^n s_0 and s_0[j] = x_{d-1-j},
  // x_n = sum_j (C^n)[d-1][j] x_{d-1-j}.
  const std::size_t d = rec.order();
  const SquareMatrix power = companion_matrix(rec).pow(n);
  std::vector<Element> out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) out.push_back(power(d - 1, d - 1 - i));
  return out;
}

// ---------------------------------------------------------------------------

Sequence1D::Sequence1D(RecurrenceType rec, std::vector<ModuleElement> initial)
    : rec_(std::move(rec)), initial_(std::move(initial)), memo_(std::make_shared<Memo>()) {
  if (initial_.size() != rec_.order())
    fail(Errc::InvalidArgument, "initial value count " + std::to_string(initial_.size()) +
                                    " does not match recurrence order " + std::to_string(rec_.order()));
  uniform_rank(initial_);
  if (!same_ring(initial_.front().ring(), rec_.ring()))
    fail(Errc::DescriptorMismatch, "initial values and coefficients live in different rings");
  memo_->terms = initial_;
}

Sequence1D Sequence1D::of(const RecurrenceType& rec, std::initializer_list<long> initial) {
  std::vector<ModuleElement> xs;
  for (long x : initial) xs.emplace_back(Element::from_integer(rec.ring(), x));
  return Sequence1D(rec, std::move(xs));
}

ModuleElement Sequence1D::term(std::uint64_t n) const {
  std::lock_guard lock(memo_->mutex);
  auto& terms = memo_->terms;
  const std::size_t d = order();
  while (terms.size() <= n) {
    std::span<const ModuleElement> window(terms.data() + terms.size() - d, d);
    terms.push_back(recurrence_step(rec_, window));
  }
  return terms[n];
}

std::vector<ModuleElement> Sequence1D::prefix(std::size_t count) const {
  if (count == 0) return {};
  term(count - 1);
  std::lock_guard lock(memo_->mutex);
  return {memo_->terms.begin(), memo_->terms.begin() + static_cast<std::ptrdiff_t>(count)};
}

ModuleElement Sequence1D::term_fast(std::uint64_t n) const {
  if (n < order()) return initial_[n];
  const auto basis = basis_values(rec_, n);
  ModuleElement out = basis[0] * initial_[0];
  for (std::size_t i = 1; i < order(); ++i) out += basis[i] * initial_[i];
  return out;
}

Sequence1D operator+(const Sequence1D& lhs, const Sequence1D& rhs) {
  if (!(lhs.rec_ == rhs.rec_)) fail(Errc::SpecMismatch, "sequence sum needs equal recurrence types");
  std::vector<ModuleElement> init;
  for (std::size_t i = 0; i < lhs.order(); ++i) init.push_back(lhs.initial_[i] + rhs.initial_[i]);
  return Sequence1D(lhs.rec_, std::move(init));
}

// ---------------------------------------------------------------------------

std::vector<ModuleElement> decompose(const Sequence1D& seq) { return seq.initial(); }

Sequence1D reconstruct(const RecurrenceType& rec, std::vector<ModuleElement> coords) {
  if (coords.size() != rec.order())
    fail(Errc::InvalidArgument, "reconstruct expects " + std::to_string(rec.order()) + " coordinates, got " +
                                    std::to_string(coords.size()));
  // The basis sequence P_i has initial window e_i, so sum_i P_i (x) c_i has
  // initial window (c_0, ..., c_{d-1}).
  const std::size_t rank = uniform_rank(coords);
  std::vector<ModuleElement> initial(rec.order(), ModuleElement::zero(rec.ring(), rank));
  for (std::size_t i = 0; i < rec.order(); ++i)
    for (std::size_t j = 0; j < rec.order(); ++j) initial[j] += basis_value(rec, i, j) * coords[i];
  return Sequence1D(rec, std::move(initial));
}

Sequence1D shift(const Sequence1D& seq, std::uint64_t count) {
  std::vector<ModuleElement> init;
  for (std::size_t i = 0; i < seq.order(); ++i) init.push_back(seq.term(count + i));
  return Sequence1D(seq.recurrence(), std::move(init));
}

std::vector<ModuleElement> extend_backward(const Sequence1D& seq, std::size_t k) {
  const auto& rec = seq.recurrence();
  const std::size_t d = rec.order();
  auto inv = rec[d - 1].try_invert();
  if (!inv)
    fail(Errc::NotInvertibleCoefficient,
         "a_" + std::to_string(d) + " = " + rec[d - 1].to_string() + " is not a unit in " + rec.ring()->name());
  // x_n = a_d^{-1} (x_{n+d} - a_1 x_{n+d-1} - ... - a_{d-1} x_{n+1}).
  std::vector<ModuleElement> window = seq.initial();  // x_m, ..., x_{m+d-1}
  std::vector<ModuleElement> out;
  out.reserve(k);
  for (std::size_t step = 0; step < k; ++step) {
    ModuleElement acc = window[d - 1];
    for (std::size_t j = 0; j + 1 < d; ++j) acc -= rec[j] * window[d - 2 - j];
    acc *= *inv;
    out.push_back(acc);
    window.pop_back();
    window.insert(window.begin(), std::move(acc));
  }
  return out;
}

bool check_membership(std::span<const ModuleElement> window, const RecurrenceType& rec) {
  const std::size_t d = rec.order();
  if (window.size() < d + 1)
    fail(Errc::InvalidArgument, "membership window needs at least " + std::to_string(d + 1) + " terms");
  for (std::size_t start = 0; start + d < window.size(); ++start)
    if (!(recurrence_step(rec, window.subspan(start, d)) == window[start + d])) return false;
  return true;
}

}  // namespace fibmod
