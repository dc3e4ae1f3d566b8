#pragma once

/**
 * @file genfun.hpp
 * @brief Rational generating functions of recurrence sequences.
 *
 * For a p-axis sequence with axis types a^(i) of order d_i,
 *
 *   G(t_1..t_p) = prod_i q_i(t_i)^{-1} * sum_j prod_i Q^(i)_{j_i}(t_i) x_{j_1..j_p}
 *
 * with q(t) = 1 - a_1 t - ... - a_d t^d and
 * Q_i(t) = t^i (1 - a_1 t - ... - a_{d-i-1} t^{d-i-1}).
 *
 * Polynomials are elements of a Polynomial ring over the coefficient ring, so
 * everything stays exact and generic.
 */

#include <string>
#include <vector>

#include "fibmod/hypercube.hpp"
#include "fibmod/multiseq.hpp"
#include "fibmod/recurrence.hpp"
#include "fibmod/ring.hpp"

namespace fibmod {

/// "t" for one axis, "t", "s" for two, "t1".."tp" otherwise.
std::vector<std::string> default_variables(std::size_t dims);

/// Numerator polynomial over per-variable denominators q_i(t_i).
struct RationalGF {
  std::vector<std::string> variables;
  Element numerator;                  ///< in Polynomial(R; variables)
  std::vector<Element> denominators;  ///< q_i in Polynomial(R; {variables[i]})
  /// Optional factored form of each denominator (empty when not factored).
  std::vector<std::vector<Element>> denominator_factors;

  std::size_t dims() const { return variables.size(); }
};

/// Coefficients of a multivariate power series up to per-variable bounds
/// (inclusive), axis 1 fastest.
struct TruncatedSeries {
  std::vector<std::string> variables;
  Hypercube<Element> coefficients;

  const Element& at(const Index& exponents) const { return coefficients.at(exponents); }
};

/// q(t) = 1 - a_1 t - ... - a_d t^d in Polynomial(R; {var}).
Element q_poly(const RecurrenceType& rec, const std::string& var = "t");

/// Q_0, ..., Q_{d-1} in Polynomial(R; {var}).
std::vector<Element> numerator_basis_polys(const RecurrenceType& rec, const std::string& var = "t");

/// Requires rank-one entries.
RationalGF gf(const MultiSequence& mseq);
/// One scalar generating function per module coordinate.
std::vector<RationalGF> gf_per_coordinate(const MultiSequence& mseq);

/// numerator * prod q_i^{-1} up to `orders` (inclusive) along each variable.
TruncatedSeries expand(const RationalGF& gf, const Index& orders);

/// Truncated product of a series with a polynomial in the same variables.
TruncatedSeries multiply_truncated(const TruncatedSeries& series, const Element& poly);

/// expand(gf(mseq)) agrees with term(mseq) at every index within `orders`.
bool verify_gf(const MultiSequence& mseq, const Index& orders);
bool verify_gf(const MultiSequence& mseq, const RationalGF& g, const Index& orders);

/// Re-expresses a univariate polynomial as an element of a multivariate ring,
/// placing its variable at position `axis`.
Element embed_univariate(const Element& poly, const Ring& target, std::size_t axis);

/// "t / (1 - t - t^2)", "(1 - s + t*s) / (1 - t - t^2)(1 - s - 3s^2)".
std::string to_string(const RationalGF& gf);

}  // namespace fibmod
