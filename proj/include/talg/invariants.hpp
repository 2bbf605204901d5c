/**
 * Invariant theory of finite 2x2 matrix groups acting on C[x, y]:
 * bivariate polynomials over Q(zeta_24), the group action by linear
 * substitution, Reynolds averaging, E-polynomials, Molien series (with an
 * independent low-degree cross-check), and exact generation certificates
 * for pairs of fundamental invariants.
 */
#ifndef TALG_INVARIANTS_HPP
#define TALG_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "talg/cyclotomic.hpp"
#include "talg/matgroup.hpp"

namespace talg {

/** Orders monomials x^a y^b by descending x-power, then descending y-power. */
struct MonomialOrder
{
    bool operator()(const std::pair<int, int>& lhs, const std::pair<int, int>& rhs) const
    {
        if (lhs.first != rhs.first)
        {
            return lhs.first > rhs.first;
        }
        return lhs.second > rhs.second;
    }
};

/**
 * A bivariate polynomial with Q(zeta_24) coefficients, stored as a
 * zero-free monomial map.
 */
class BivarPoly
{
public:
    std::map<std::pair<int, int>, CycNum, MonomialOrder> terms;

    BivarPoly() = default;

    static BivarPoly monomial(int xPow, int yPow, const CycNum& coeff);

    bool isZero() const;
    /** Largest total degree among monomials (-1 for the zero polynomial). */
    int totalDegree() const;
    /** True when all monomials share one total degree (zero counts as true). */
    bool isHomogeneous() const;
    CycNum coefficient(int xPow, int yPow) const;

    void addTerm(int xPow, int yPow, const CycNum& coeff);

    BivarPoly operator+(const BivarPoly& other) const;
    BivarPoly operator-(const BivarPoly& other) const;
    BivarPoly operator*(const BivarPoly& other) const;
    BivarPoly scaled(const CycNum& c) const;
    bool operator==(const BivarPoly& other) const;
    bool operator!=(const BivarPoly& other) const;

    BivarPoly derivativeX() const;
    BivarPoly derivativeY() const;

    /**
     * Canonical text form, e.g. "x^8 + 14*x^4*y^4 + y^8"; non-rational
     * coefficients are parenthesized in the zeta power basis.
     */
    std::string toString() const;
};

/**
 * Action by linear substitution: (sigma . p)(x, y) =
 * p(s00 x + s01 y, s10 x + s11 y).  Satisfies
 * actOn(actOn(p, sigma), tau) = actOn(p, sigma * tau).
 */
BivarPoly actOn(const BivarPoly& p, const Mat2& sigma);

/** Reynolds operator: the average of p over the whole group. */
BivarPoly reynolds(const BivarPoly& p, const MatGroup& group, int threads = 0);

/** True when p is fixed by every generator (hence by the group). */
bool isInvariant(const BivarPoly& p, const MatGroup& group);

/**
 * E-polynomial of degree k: the Reynolds average of x^k.  The result is
 * verified to be invariant (ConsistencyError otherwise).
 */
BivarPoly ePolynomial(const MatGroup& group, int k, int threads = 0);

/**
 * Molien series coefficients dim C[x,y]^G_k for k = 0..terms-1, from the
 * exact per-element expansion of 1/det(I - t g).  Every coefficient is
 * checked to be a nonnegative integer, and coefficients of degree <= 12
 * are cross-checked against the rank of the Reynolds images of all
 * degree-k monomials.  Throws ConsistencyError on any mismatch.
 */
std::vector<Integer> molienSeries(const MatGroup& group, int terms, int threads = 0);

/** Coefficients of 1/((1-t^a)(1-t^b)) up to terms. */
std::vector<Integer> expandProductSeries(int a, int b, int terms);

/** Jacobian determinant d(f,g)/d(x,y). */
BivarPoly jacobian(const BivarPoly& f, const BivarPoly& g);

/** One term c * f^powF * g^powG of an expression in two generators. */
struct GeneratorTerm
{
    int powF;
    int powG;
    CycNum coeff;
};

/**
 * Writes a homogeneous target as a polynomial in f and g by exact linear
 * solve over the monomial basis.
 *
 * @returns The nonzero terms, or std::nullopt when target is not in the
 *          span of {f^m g^n} of matching degree.
 */
std::optional<std::vector<GeneratorTerm> > expressInGenerators(const BivarPoly& target,
                                                               const BivarPoly& f,
                                                               const BivarPoly& g);

/** The four exact legs of a two-generator invariant-ring certificate. */
struct GenerationCertificate
{
    long degF;
    long degG;
    bool fInvariant;
    bool gInvariant;
    bool jacobianNonzero;
    long degreeProduct;
    bool degreeProductMatchesOrder;
    bool molienMatch;
    int terms;

    bool holds() const;
};

/**
 * Certifies that C[x,y]^G = C[f, g]: f and g invariant, algebraically
 * independent (nonzero Jacobian), deg f * deg g = |G|, and the Molien
 * series agreeing with 1/((1-t^degF)(1-t^degG)) through the given number
 * of terms.
 */
GenerationCertificate verifyGeneration(const MatGroup& group, const BivarPoly& f,
                                       const BivarPoly& g, int terms = 40, int threads = 0);

}  // namespace talg

#endif  // TALG_INVARIANTS_HPP
