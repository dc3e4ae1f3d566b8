#include "fibmod/genfun.hpp"

namespace fibmod {

std::vector<std::string> default_variables(std::size_t dims) {
  if (dims == 1) return {"t"};
  if (dims == 2) return {"t", "s"};
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= dims; ++i) vars.push_back("t" + std::to_string(i));
  return vars;
}

Element q_poly(const RecurrenceType& rec, const std::string& var) {
  const Ring ring = RingDescriptor::polynomial(rec.ring(), {var});
  std::vector<PolyTerm> terms{{{0}, Element::one(rec.ring())}};
  for (std::size_t j = 0; j < rec.order(); ++j)
    terms.push_back({{static_cast<std::uint32_t>(j + 1)}, -rec[j]});
  return Element::polynomial(ring, std::move(terms));
}

std::vector<Element> numerator_basis_polys(const RecurrenceType& rec, const std::string& var) {
  const Ring ring = RingDescriptor::polynomial(rec.ring(), {var});
  const std::size_t d = rec.order();
  std::vector<Element> out;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<PolyTerm> terms{{{static_cast<std::uint32_t>(i)}, Element::one(rec.ring())}};
    for (std::size_t j = 1; j + i < d; ++j)
      terms.push_back({{static_cast<std::uint32_t>(i + j)}, -rec[j - 1]});
    out.push_back(Element::polynomial(ring, std::move(terms)));
  }
  return out;
}

Element embed_univariate(const Element& poly, const Ring& target, std::size_t axis) {
  if (poly.kind() != RingKind::Polynomial || poly.ring()->variable_count() != 1)
    fail(Errc::InvalidArgument, "embed_univariate needs a univariate polynomial");
  std::vector<PolyTerm> terms;
  for (const auto& t : poly.terms()) {
    Monomial m(target->variable_count(), 0);
    m.at(axis) = t.exponents[0];
    terms.push_back({std::move(m), t.coefficient});
  }
  return Element::polynomial(target, std::move(terms));
}

namespace {

RationalGF build_gf(const MultiSequence& mseq, std::size_t coordinate) {
  const FibSpec& spec = mseq.spec();
  const std::size_t p = spec.dims();
  RationalGF out{default_variables(p), Element::zero(RingDescriptor::integer()), {}, {}};
  const Ring multi = RingDescriptor::polynomial(spec.ring(), out.variables);

  std::vector<std::vector<Element>> q_basis(p);
  for (std::size_t i = 0; i < p; ++i) {
    out.denominators.push_back(q_poly(spec.axis(i), out.variables[i]));
    for (const auto& q : numerator_basis_polys(spec.axis(i), out.variables[i]))
      q_basis[i].push_back(embed_univariate(q, multi, i));
  }

  Element numerator = Element::zero(multi);
  const InitialBlock& block = mseq.initial();
  for (std::size_t flat = 0; flat < block.size(); ++flat) {
    const Element& x = block[flat][coordinate];
    if (x.is_zero()) continue;
    const Index j = block.unravel(flat);
    Element product = q_basis[0][j[0]];
    for (std::size_t i = 1; i < p; ++i) product *= q_basis[i][j[i]];
    // Scalars enter as constant polynomials.
    numerator += Element::polynomial(multi, {{Monomial(p, 0), x}}) * product;
  }
  out.numerator = std::move(numerator);
  return out;
}

}  // namespace

RationalGF gf(const MultiSequence& mseq) {
  if (mseq.rank() != 1)
    fail(Errc::InvalidArgument, "gf needs rank-one entries; use gf_per_coordinate for rank " +
                                    std::to_string(mseq.rank()));
  return build_gf(mseq, 0);
}

std::vector<RationalGF> gf_per_coordinate(const MultiSequence& mseq) {
  std::vector<RationalGF> out;
  for (std::size_t c = 0; c < mseq.rank(); ++c) out.push_back(build_gf(mseq, c));
  return out;
}

TruncatedSeries expand(const RationalGF& g, const Index& orders) {
  const std::size_t p = g.dims();
  if (orders.size() != p) fail(Errc::InvalidArgument, "expand needs one bound per variable");
  const Ring& base = g.numerator.ring()->base();
  Shape shape;
  for (auto o : orders) shape.push_back(static_cast<std::size_t>(o) + 1);

  auto coeffs = Hypercube<Element>::generate(shape, [&](const Index&) { return Element::zero(base); });
  for (const auto& t : g.numerator.terms()) {
    bool inside = true;
    for (std::size_t i = 0; i < p; ++i) inside = inside && t.exponents[i] <= orders[i];
    if (!inside) continue;
    Index idx(t.exponents.begin(), t.exponents.end());
    coeffs.at(idx) = t.coefficient;
  }

  // Divide by each q_i along its own axis: with q = sum_m q_m t^m,
  // c_n = q_0^{-1} (b_n - sum_{m>=1} q_m c_{n-m}).
  for (std::size_t axis = 0; axis < p; ++axis) {
    const Element& q = g.denominators[axis];
    auto lead_inv = q.coefficient({0}).try_invert();
    if (!lead_inv)
      fail(Errc::NotInvertible, "denominator " + q.to_string() + " has a non-unit constant term");
    std::vector<std::pair<std::uint64_t, Element>> tail;
    for (const auto& t : q.terms())
      if (t.exponents[0] > 0) tail.emplace_back(t.exponents[0], t.coefficient);

    for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
      // Visit positions in increasing order along `axis`: axis-1-fastest order
      // guarantees lower indices along any axis come first.
      Index idx = coeffs.unravel(flat);
      Element c = coeffs[flat];
      for (const auto& [m, qm] : tail) {
        if (m > idx[axis]) continue;
        Index prev = idx;
        prev[axis] -= m;
        c -= qm * coeffs.at(prev);
      }
      coeffs[flat] = *lead_inv * c;
    }
  }
  return TruncatedSeries{g.variables, std::move(coeffs)};
}

TruncatedSeries multiply_truncated(const TruncatedSeries& series, const Element& poly) {
  const auto& shape = series.coefficients.shape();
  const Ring& base = series.coefficients[0].ring();
  auto out = Hypercube<Element>::generate(shape, [&](const Index&) { return Element::zero(base); });
  for (const auto& t : poly.terms()) {
    for (std::size_t flat = 0; flat < series.coefficients.size(); ++flat) {
      Index idx = series.coefficients.unravel(flat);
      bool inside = true;
      for (std::size_t i = 0; i < shape.size(); ++i) {
        idx[i] += t.exponents[i];
        inside = inside && idx[i] < shape[i];
      }
      if (inside) out.at(idx) += t.coefficient * series.coefficients[flat];
    }
  }
  return TruncatedSeries{series.variables, std::move(out)};
}

bool verify_gf(const MultiSequence& mseq, const RationalGF& g, const Index& orders) {
  const TruncatedSeries series = expand(g, orders);
  for (std::size_t flat = 0; flat < series.coefficients.size(); ++flat) {
    const Index idx = series.coefficients.unravel(flat);
    if (!(series.coefficients[flat] == mseq.term(idx).scalar())) return false;
  }
  return true;
}

bool verify_gf(const MultiSequence& mseq, const Index& orders) { return verify_gf(mseq, gf(mseq), orders); }

std::string to_string(const RationalGF& g) {
  std::string num = g.numerator.to_string();
  if (g.numerator.kind() == RingKind::Polynomial && g.numerator.terms().size() > 1) num = "(" + num + ")";
  std::string den;
  for (std::size_t i = 0; i < g.denominators.size(); ++i) {
    const bool factored = i < g.denominator_factors.size() && !g.denominator_factors[i].empty();
    if (factored) {
      for (const auto& f : g.denominator_factors[i]) den += "(" + f.to_string() + ")";
    } else {
      den += "(" + g.denominators[i].to_string() + ")";
    }
  }
  return num + " / " + den;
}

}  // namespace fibmod
