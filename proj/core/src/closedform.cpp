#include "fibmod/closedform.hpp"

#include <array>

namespace fibmod {

namespace {

Element signed_pow(const Element& x, std::int64_t n) {
  if (n >= 0) return x.pow(static_cast<std::uint64_t>(n));
  auto inv = x.try_invert();
  if (!inv) fail(Errc::NotInvertible, "negative power of non-unit " + x.to_string());
  return inv->pow(static_cast<std::uint64_t>(-n));
}

Element delta_inverse(const RootPair& roots) {
  auto inv = roots.delta().try_invert();
  if (!inv) fail(Errc::NotInvertible, "r2 - r1 = " + roots.delta().to_string() + " is not a unit");
  return *inv;
}

void require_match(const MultiSequence& mseq, const RootPair& roots) {
  if (!same_ring(mseq.ring(), roots.ring())) fail(Errc::DescriptorMismatch, "roots and sequence live in different rings");
  for (std::size_t i = 0; i < mseq.dims(); ++i) {
    const auto& rec = mseq.spec().axis(i);
    if (!roots.matches(rec))
      fail(Errc::SpecMismatch, "axis " + std::to_string(i + 1) + " is not (r1 + r2, -r1 r2) = (" + roots.a().to_string() +
                                   ", " + roots.b().to_string() + ")");
  }
}

void require_basis_index(int i) {
  if (i != 0 && i != 1) fail(Errc::InvalidArgument, "root-form basis index must be 0 or 1");
}

}  // namespace

RootPair::RootPair(Element r1, Element r2) : r1_(std::move(r1)), r2_(std::move(r2)) {
  if (!same_ring(r1_.ring(), r2_.ring())) fail(Errc::DescriptorMismatch, "roots must share one ring");
}

bool RootPair::matches(const RecurrenceType& rec) const {
  return rec.order() == 2 && same_ring(rec.ring(), ring()) && rec[0] == a() && rec[1] == b();
}

RecurrenceType RootPair::recurrence() const { return RecurrenceType({a(), b()}); }

Element R_poly(int i, std::uint64_t n, const RootPair& roots) {
  require_basis_index(i);
  const Ring& ring = roots.ring();
  if (n == 0) return i == 0 ? Element::one(ring) : Element::zero(ring);
  Element sum = Element::zero(ring);
  if (i == 1) {
    // r1^{n-1} + r1^{n-2} r2 + ... + r2^{n-1}
    for (std::uint64_t u = 0; u < n; ++u) sum += roots.r1().pow(u) * roots.r2().pow(n - 1 - u);
    return sum;
  }
  // -(r1^{n-1} r2 + ... + r1 r2^{n-1})
  for (std::uint64_t u = 1; u < n; ++u) sum += roots.r1().pow(u) * roots.r2().pow(n - u);
  return -sum;
}

Element S_value(int j, std::int64_t n, const RootPair& roots) {
  require_basis_index(j);
  const Element r1n = signed_pow(roots.r1(), n);
  const Element r2n = signed_pow(roots.r2(), n);
  if (j == 0) return r1n * roots.r2() - roots.r1() * r2n;
  return r2n - r1n;
}

Element R_rational(int i, std::int64_t n, const RootPair& roots) {
  require_basis_index(i);
  const Element inv = delta_inverse(roots);
  return S_value(i, n, roots) * inv;
}

ModuleElement term_via_roots(const MultiSequence& mseq, const RootPair& roots, const SignedIndex& index,
                             bool division_free) {
  require_match(mseq, roots);
  const std::size_t p = mseq.dims();
  if (index.size() != p) fail(Errc::InvalidArgument, "index dimension does not match the spec");
  std::vector<std::array<Element, 2>> s;
  s.reserve(p);
  for (std::size_t i = 0; i < p; ++i) s.push_back({S_value(0, index[i], roots), S_value(1, index[i], roots)});

  ModuleElement out = ModuleElement::zero(mseq.ring(), mseq.rank());
  const InitialBlock& block = mseq.initial();
  for (std::size_t flat = 0; flat < block.size(); ++flat) {
    const Index j = block.unravel(flat);
    Element weight = s[0][j[0]];
    for (std::size_t i = 1; i < p; ++i) weight *= s[i][j[i]];
    out += weight * block[flat];
  }
  if (!division_free) out *= delta_inverse(roots).pow(p);
  return out;
}

RationalGF gf_via_roots(const MultiSequence& mseq, const RootPair& roots) {
  require_match(mseq, roots);
  const std::size_t p = mseq.dims();
  if (mseq.rank() != 1) fail(Errc::InvalidArgument, "gf_via_roots needs rank-one entries");
  const Ring& base = mseq.ring();
  RationalGF out{default_variables(p), Element::zero(base), {}, {}};
  const Ring multi = RingDescriptor::polynomial(base, out.variables);

  std::vector<std::array<Element, 2>> q_basis;
  for (std::size_t i = 0; i < p; ++i) {
    const Ring uni = RingDescriptor::polynomial(base, {out.variables[i]});
    const Element one = Element::one(uni);
    const Element t = Element::variable(uni, 0);
    auto constant = [&](const Element& c) { return Element::polynomial(uni, {{{0}, c}}); };
    const Element f1 = one - constant(roots.r1()) * t;
    const Element f2 = one - constant(roots.r2()) * t;
    out.denominators.push_back(f1 * f2);
    out.denominator_factors.push_back({f1, f2});
    const Element q0 = one - constant(roots.r1() + roots.r2()) * t;
    q_basis.push_back({embed_univariate(q0, multi, i), embed_univariate(t, multi, i)});
  }

  Element numerator = Element::zero(multi);
  const InitialBlock& block = mseq.initial();
  for (std::size_t flat = 0; flat < block.size(); ++flat) {
    const Element& x = block[flat].scalar();
    if (x.is_zero()) continue;
    const Index j = block.unravel(flat);
    Element product = q_basis[0][j[0]];
    for (std::size_t i = 1; i < p; ++i) product *= q_basis[i][j[i]];
    numerator += Element::polynomial(multi, {{Monomial(p, 0), x}}) * product;
  }
  out.numerator = std::move(numerator);
  return out;
}

}  // namespace fibmod
