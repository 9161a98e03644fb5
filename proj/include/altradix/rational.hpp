#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "altradix/errors.hpp"

namespace altradix {

/*
 * Exact arithmetic kernel.  Every value in the library is a rational with
 * arbitrary-precision numerator and denominator; nothing is ever evaluated
 * in floating point.  boost::multiprecision keeps rationals canonical
 * (gcd(p,q) = 1, q > 0) after every operation, which is exactly the
 * invariant the rest of the library leans on for operator== checks.
 */
using Integer        = boost::multiprecision::cpp_int;
using RationalNumber = boost::multiprecision::cpp_rational;

// b^e for e >= 0 (validation_error on negative exponent).
Integer int_pow(const Integer& b, long long e);

// p/q as a canonical rational; validation_error when q == 0.
RationalNumber rat_from_parts(const Integer& p, const Integer& q);

// Accepts "p" or "p/q" with optional leading '-' on p (and on q, why not);
// parse_error on anything else, validation_error on q == 0.
RationalNumber parse_rational(std::string_view text);

// Canonical text form: "p/q", with "/q" omitted when q == 1.
std::string format_rational(const RationalNumber& r);

// Always "p/q", even for integers ("1/1").  Used at the CLI boundary.
std::string format_rational_explicit(const RationalNumber& r);

// Exact long division to `places` digits after the point, truncating toward
// zero (no rounding).  places == 0 gives just the integer part.
std::string decimal_string(const RationalNumber& r, long long places);

// first/(1 - ratio); validation_error unless |ratio| < 1.
RationalNumber geometric_series_sum(const RationalNumber& first_term,
                                    const RationalNumber& ratio);

/*
 * Value of the series t_1 + t_2 + ... where the first terms are
 * `prefix_terms`, the next |period_terms| terms are `period_terms`, and
 * every later block repeats the previous block scaled by `period_ratio`:
 *
 *   sum(prefix) + sum(period) * (1 + r + r^2 + ...) = sum(prefix) + sum(period)/(1-r)
 *
 * This is the single closed form every evaluator in the library reduces to.
 * validation_error unless |period_ratio| < 1 (when period_terms is empty the
 * ratio is irrelevant and unchecked).
 */
RationalNumber eventually_periodic_value(const std::vector<RationalNumber>& prefix_terms,
                                         const std::vector<RationalNumber>& period_terms,
                                         const RationalNumber& period_ratio);

} // namespace altradix
