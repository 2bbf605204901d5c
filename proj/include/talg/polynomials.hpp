/**
 * Univariate polynomials over Q: exact ring/field operations, gcd,
 * characteristic polynomials of rational matrices, factorization over Q
 * (numeric root clustering with exact verification), and rational
 * reconstruction from high-precision floats.
 *
 * Everything returned by this module is exact; floating point only ever
 * proposes candidates that are verified with exact arithmetic before use.
 */
#ifndef TALG_POLYNOMIALS_HPP
#define TALG_POLYNOMIALS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "talg/cyclotomic.hpp"
#include "talg/linalg.hpp"
#include "talg/rational.hpp"

namespace talg {

/** Coefficients in ascending degree; no trailing zeros (zero poly = {}). */
typedef std::vector<Rational> RatPoly;

int degree(const RatPoly& p);
RatPoly trimPoly(RatPoly p);
RatPoly addPoly(const RatPoly& a, const RatPoly& b);
RatPoly subPoly(const RatPoly& a, const RatPoly& b);
RatPoly mulPoly(const RatPoly& a, const RatPoly& b);
RatPoly scalePoly(const RatPoly& a, const Rational& c);

/** Quotient and remainder of exact division over Q (b nonzero). */
std::pair<RatPoly, RatPoly> divModPoly(const RatPoly& a, const RatPoly& b);

/** Monic greatest common divisor. */
RatPoly gcdPoly(const RatPoly& a, const RatPoly& b);

/** Extended gcd: returns (g, u, v) monic with u*a + v*b = g. */
std::tuple<RatPoly, RatPoly, RatPoly> extendedGcdPoly(const RatPoly& a, const RatPoly& b);

RatPoly derivativePoly(const RatPoly& p);
RatPoly monicPoly(const RatPoly& p);

/** p divided by gcd(p, p'): same roots, all simple. */
RatPoly squarefreePart(const RatPoly& p);

Rational evaluatePoly(const RatPoly& p, const Rational& x);
CycNum evaluatePolyCyc(const RatPoly& p, const CycNum& x);

/** Horner evaluation of p at a square matrix argument. */
RatMatrix evaluatePolyMatrix(const RatPoly& p, const RatMatrix& m);

/** Characteristic polynomial det(xI - m) by the Faddeev-LeVerrier recurrence. */
RatPoly charPoly(const RatMatrix& m);

/** Human-readable form, e.g. "x^2 - 2" (for error messages). */
std::string polyToString(const RatPoly& p);

/**
 * Nearest rational with denominator <= bound, via continued fractions.
 *
 * @param value High-precision real.
 * @param denominatorBound Largest denominator considered.
 * @param tolerance Acceptance threshold |value - p/q| <= tolerance.
 * @returns The reconstruction, or std::nullopt if no candidate is close enough.
 */
std::optional<Rational> rationalReconstruct(const BigFloat& value,
                                            const Integer& denominatorBound,
                                            const BigFloat& tolerance);

/**
 * All complex roots of a squarefree polynomial (Durand-Kerner iteration at
 * the given precision).  Roots are returned sorted by (real, imaginary)
 * parts for determinism.
 */
std::vector<std::pair<BigFloat, BigFloat> > complexRoots(const RatPoly& p,
                                                         unsigned precisionBits = 512);

/**
 * Factor a nonconstant polynomial into monic irreducible factors over Q
 * (returned with multiplicity, sorted deterministically).  Factors are
 * found by exact rational-root extraction plus numeric root clustering;
 * every candidate factor is verified by exact division, and a degree-d
 * remainder is declared irreducible only after all proper root subsets
 * fail exact verification.
 */
std::vector<RatPoly> factorOverQ(const RatPoly& p);

/**
 * sqrt(r) inside Q(zeta_24), if it exists there: the squarefree part of r
 * must be one of +-1, +-2, +-3, +-6 (times a rational square).
 *
 * @returns A CycNum s with s*s = r, or std::nullopt.
 */
std::optional<CycNum> sqrtInCyclotomic(const Rational& r);

}  // namespace talg

#endif  // TALG_POLYNOMIALS_HPP
