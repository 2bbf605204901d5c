/**
 * Exact arithmetic in the cyclotomic field Q(zeta_24).
 *
 * Elements are stored on the power basis {zeta^0, ..., zeta^7} over Q,
 * reduced modulo the 24th cyclotomic polynomial Phi_24(x) = x^8 - x^4 + 1,
 * so the representation is unique.  Q(zeta_24) contains sqrt(2), sqrt(3),
 * i and the primitive cube root of unity, i.e. every entry of the four
 * built-in generator matrices.
 */
#ifndef TALG_CYCLOTOMIC_HPP
#define TALG_CYCLOTOMIC_HPP

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <boost/multiprecision/mpfr.hpp>

#include "talg/errors.hpp"
#include "talg/linalg.hpp"
#include "talg/rational.hpp"

namespace talg {

typedef boost::multiprecision::mpfr_float BigFloat;

class CycNum
{
    public:
        /** Coefficients c_m of sum c_m zeta^m, m = 0..7. */
        std::array<Rational, 8> coeffs;

        CycNum()
        {
            this->coeffs.fill(Rational(0));
        }

        CycNum(int n)
        {
            this->coeffs.fill(Rational(0));
            this->coeffs[0] = n;
        }

        CycNum(const Rational& r)
        {
            this->coeffs.fill(Rational(0));
            this->coeffs[0] = r;
        }

        explicit CycNum(const std::array<Rational, 8>& c) : coeffs(c) {}

        /** zeta^m reduced to the power basis (any integer exponent). */
        static CycNum zetaPow(long long m);

        /** Named constants of Q(zeta_24). */
        static const CycNum& sqrt2();    // zeta^3 + zeta^-3
        static const CycNum& sqrt3();    // zeta^2 + zeta^-2
        static const CycNum& i();        // zeta^6
        static const CycNum& omega3();   // zeta^8, primitive cube root of 1

        bool isZero() const;
        bool isRational() const;

        /** The rational value, if the element lies in Q. */
        std::optional<Rational> asRational() const;

        CycNum operator-() const;
        CycNum operator+(const CycNum& other) const;
        CycNum operator-(const CycNum& other) const;
        CycNum operator*(const CycNum& other) const;
        CycNum operator/(const CycNum& other) const;
        CycNum& operator+=(const CycNum& other);
        CycNum& operator-=(const CycNum& other);
        CycNum& operator*=(const CycNum& other);
        bool operator==(const CycNum& other) const { return this->coeffs == other.coeffs; }
        bool operator!=(const CycNum& other) const { return !(*this == other); }

        /** Complex conjugation zeta -> zeta^-1 (a field automorphism). */
        CycNum conjugate() const;

        /**
         * Multiplicative inverse, computed by solving the 8x8 rational
         * linear system a*x = 1 in the power basis.
         *
         * @throws DivisionByZeroError on zero input.
         */
        CycNum inverse() const;

        /**
         * Complex floating approximation (real, imaginary) at the given
         * working precision.
         *
         * @param precisionBits Binary precision, >= 53.
         */
        std::pair<BigFloat, BigFloat> toComplexApprox(unsigned precisionBits = 256) const;

        /**
         * Canonical text form "c0 + c1*z + c2*z^2 + ... + c7*z^7" with
         * rationals as "p/q" (all eight terms always present).
         */
        std::string toString() const;

        /**
         * Parse the canonical text form.  Terms may be omitted or reordered;
         * "z^k" accepts any k >= 0 (reduced via zetaPow).
         *
         * @throws ParseError on malformed input.
         */
        static CycNum parse(const std::string& text);
};

inline CycNum operator*(const Rational& a, const CycNum& b)
{
    return CycNum(a) * b;
}

inline std::ostream& operator<<(std::ostream& os, const CycNum& c)
{
    return os << c.toString();
}

}  // namespace talg

namespace Eigen {

/** Minimal Eigen scalar traits so CycNum matrices can use Eigen storage. */
template <>
struct NumTraits<talg::CycNum>
{
    typedef talg::CycNum Real;
    typedef talg::CycNum NonInteger;
    typedef talg::CycNum Nested;
    typedef talg::CycNum Literal;
    enum
    {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 64,
        AddCost = 64,
        MulCost = 512
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace talg {

typedef Eigen::Matrix<CycNum, Eigen::Dynamic, Eigen::Dynamic> CycMatrix;
typedef Eigen::Matrix<CycNum, Eigen::Dynamic, 1> CycVector;

}  // namespace talg

#endif  // TALG_CYCLOTOMIC_HPP
