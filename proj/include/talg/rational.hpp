/**
 * Exact rational scalars (GMP-backed) plus parsing/printing helpers.
 *
 * Rationals are always stored in lowest terms with a positive denominator;
 * the GMP backend canonicalizes on every operation, so arithmetic is exact
 * with no rounding anywhere.
 */
#ifndef TALG_RATIONAL_HPP
#define TALG_RATIONAL_HPP

#include <optional>
#include <string>
#include <boost/multiprecision/gmp.hpp>

#include "talg/errors.hpp"

namespace talg {

typedef boost::multiprecision::mpz_int Integer;
typedef boost::multiprecision::mpq_rational Rational;

/**
 * Render a rational in canonical text form: "p" for integers, "p/q" otherwise,
 * with q > 0 and gcd(p, q) = 1.
 *
 * @param r Input rational.
 * @returns Canonical string.
 */
std::string toString(const Rational& r);

/**
 * Parse the canonical text form "p" or "p/q" (optional leading sign,
 * surrounding whitespace allowed).
 *
 * @param text Input string.
 * @returns Parsed rational in lowest terms.
 * @throws ParseError on malformed input or zero denominator.
 */
Rational parseRational(const std::string& text);

/**
 * Floor of the integer square root of a nonnegative integer.
 *
 * @param n Nonnegative integer.
 * @returns Largest s with s*s <= n.
 */
Integer integerSqrt(const Integer& n);

/**
 * Exact integer square root, if one exists.
 *
 * @param n Nonnegative integer.
 * @returns s with s*s == n, or std::nullopt if n is not a perfect square.
 */
std::optional<Integer> exactSqrt(const Integer& n);

/**
 * Convert a rational to double (for diagnostics only; never used in the
 * exact path).
 */
double toDouble(const Rational& r);

}  // namespace talg

#endif  // TALG_RATIONAL_HPP
