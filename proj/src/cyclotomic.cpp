#include "talg/cyclotomic.hpp"

#include <cctype>
#include <sstream>

namespace talg {

namespace {

/**
 * Reduce a degree-<=14 polynomial in zeta by Phi_24: x^8 = x^4 - 1, applied
 * from the top coefficient down.
 */
std::array<Rational, 8> reducePoly(std::array<Rational, 15> c)
{
    for (int m = 14; m >= 8; --m)
    {
        if (c[m] == 0)
            continue;
        c[m - 4] += c[m];
        c[m - 8] -= c[m];
        c[m] = 0;
    }
    std::array<Rational, 8> out;
    for (int m = 0; m < 8; ++m)
        out[m] = c[m];
    return out;
}

}  // namespace

CycNum CycNum::zetaPow(long long m)
{
    long long r = m % 24;
    if (r < 0)
        r += 24;
    std::array<Rational, 15> c;
    c.fill(Rational(0));
    if (r <= 14)
    {
        c[r] = 1;
        return CycNum(reducePoly(c));
    }
    // zeta^r = zeta^(r-4) - zeta^(r-8) for r >= 8.
    return zetaPow(r - 4) - zetaPow(r - 8);
}

const CycNum& CycNum::sqrt2()
{
    static const CycNum value = zetaPow(3) + zetaPow(21);
    return value;
}

const CycNum& CycNum::sqrt3()
{
    static const CycNum value = zetaPow(2) + zetaPow(22);
    return value;
}

const CycNum& CycNum::i()
{
    static const CycNum value = zetaPow(6);
    return value;
}

const CycNum& CycNum::omega3()
{
    static const CycNum value = zetaPow(8);
    return value;
}

bool CycNum::isZero() const
{
    for (const Rational& c : this->coeffs)
    {
        if (c != 0)
            return false;
    }
    return true;
}

bool CycNum::isRational() const
{
    for (int m = 1; m < 8; ++m)
    {
        if (this->coeffs[m] != 0)
            return false;
    }
    return true;
}

std::optional<Rational> CycNum::asRational() const
{
    if (!this->isRational())
        return std::nullopt;
    return this->coeffs[0];
}

CycNum CycNum::operator-() const
{
    CycNum out;
    for (int m = 0; m < 8; ++m)
        out.coeffs[m] = -this->coeffs[m];
    return out;
}

CycNum CycNum::operator+(const CycNum& other) const
{
    CycNum out;
    for (int m = 0; m < 8; ++m)
        out.coeffs[m] = this->coeffs[m] + other.coeffs[m];
    return out;
}

CycNum CycNum::operator-(const CycNum& other) const
{
    CycNum out;
    for (int m = 0; m < 8; ++m)
        out.coeffs[m] = this->coeffs[m] - other.coeffs[m];
    return out;
}

CycNum CycNum::operator*(const CycNum& other) const
{
    std::array<Rational, 15> prod;
    prod.fill(Rational(0));
    for (int a = 0; a < 8; ++a)
    {
        if (this->coeffs[a] == 0)
            continue;
        for (int b = 0; b < 8; ++b)
        {
            if (other.coeffs[b] == 0)
                continue;
            prod[a + b] += this->coeffs[a] * other.coeffs[b];
        }
    }
    return CycNum(reducePoly(prod));
}

CycNum CycNum::operator/(const CycNum& other) const
{
    return *this * other.inverse();
}

CycNum& CycNum::operator+=(const CycNum& other)
{
    for (int m = 0; m < 8; ++m)
        this->coeffs[m] += other.coeffs[m];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& other)
{
    for (int m = 0; m < 8; ++m)
        this->coeffs[m] -= other.coeffs[m];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& other)
{
    *this = *this * other;
    return *this;
}

CycNum CycNum::conjugate() const
{
    CycNum out;
    for (int m = 0; m < 8; ++m)
    {
        if (this->coeffs[m] == 0)
            continue;
        CycNum term = zetaPow(24 - m);
        for (int j = 0; j < 8; ++j)
            out.coeffs[j] += this->coeffs[m] * term.coeffs[j];
    }
    return out;
}

CycNum CycNum::inverse() const
{
    if (this->isZero())
        throw DivisionByZeroError("CycNum::inverse of zero");

    // Column j of M holds the coefficients of (this * zeta^j); solving
    // M x = e_0 yields the power-basis coordinates of the inverse.
    RatMatrix m(8, 8);
    for (int j = 0; j < 8; ++j)
    {
        const CycNum col = *this * zetaPow(j);
        for (int r = 0; r < 8; ++r)
            m(r, j) = col.coeffs[r];
    }
    RatVector e0 = RatVector::Constant(8, Rational(0));
    e0(0) = 1;
    std::optional<RatVector> x = solveLinear<Rational>(m, e0);
    if (!x)
        throw ConsistencyError("CycNum::inverse: singular regular representation");
    CycNum out;
    for (int j = 0; j < 8; ++j)
        out.coeffs[j] = (*x)(j);
    return out;
}

std::pair<BigFloat, BigFloat> CycNum::toComplexApprox(unsigned precisionBits) const
{
    if (precisionBits < 53)
        precisionBits = 53;
    const unsigned digits = static_cast<unsigned>(precisionBits * 0.30103) + 5;
    const unsigned saved = BigFloat::default_precision();
    BigFloat::default_precision(digits);

    BigFloat re(0), im(0);
    const BigFloat pi = boost::multiprecision::atan(BigFloat(1)) * 4;
    for (int m = 0; m < 8; ++m)
    {
        if (this->coeffs[m] == 0)
            continue;
        const BigFloat c =
            BigFloat(boost::multiprecision::numerator(this->coeffs[m]).str())
            / BigFloat(boost::multiprecision::denominator(this->coeffs[m]).str());
        const BigFloat angle = pi * (2 * m) / 24;
        re += c * boost::multiprecision::cos(angle);
        im += c * boost::multiprecision::sin(angle);
    }
    BigFloat::default_precision(saved);
    return std::make_pair(re, im);
}

std::string CycNum::toString() const
{
    std::ostringstream out;
    for (int m = 0; m < 8; ++m)
    {
        if (m > 0)
            out << " + ";
        out << talg::toString(this->coeffs[m]);
        if (m == 1)
            out << "*z";
        else if (m > 1)
            out << "*z^" << m;
    }
    return out.str();
}

CycNum CycNum::parse(const std::string& text)
{
    // Split into terms on '+', treating a '-' that follows a digit or 'z'
    // as "+ -" (so both the canonical form and minus-separated input parse).
    // Each term is then "c", "c*z" or "c*z^k".
    CycNum out;
    std::string term;
    std::vector<std::string> terms;
    char prevNonSpace = '\0';
    for (std::size_t p = 0; p <= text.size(); ++p)
    {
        const bool separator =
            p == text.size() || text[p] == '+'
            || (text[p] == '-'
                && (std::isdigit(static_cast<unsigned char>(prevNonSpace)) || prevNonSpace == 'z'));
        if (separator)
        {
            terms.push_back(term);
            term.clear();
            if (p < text.size() && text[p] == '-')
                term += '-';
            prevNonSpace = '\0';
        }
        else
        {
            term += text[p];
            if (!std::isspace(static_cast<unsigned char>(text[p])))
                prevNonSpace = text[p];
        }
    }
    for (const std::string& raw : terms)
    {
        std::string t;
        for (char ch : raw)
        {
            if (!std::isspace(static_cast<unsigned char>(ch)))
                t += ch;
        }
        if (t.empty())
            throw ParseError("empty term in cyclotomic literal: \"" + text + "\"");

        std::string coeffPart = t;
        long long power = 0;
        const std::size_t star = t.find('*');
        const std::size_t zpos = t.find('z');
        if (zpos != std::string::npos)
        {
            std::string zPart;
            if (star != std::string::npos)
            {
                coeffPart = t.substr(0, star);
                zPart = t.substr(star + 1);
            }
            else
            {
                coeffPart = "1";
                zPart = t;
                if (zpos != 0)
                {
                    coeffPart = t.substr(0, zpos);    // allow "-z^3"
                    if (coeffPart == "-")
                        coeffPart = "-1";
                    zPart = t.substr(zpos);
                }
            }
            if (zPart == "z")
            {
                power = 1;
            }
            else if (zPart.size() > 2 && zPart[0] == 'z' && zPart[1] == '^')
            {
                try
                {
                    power = std::stoll(zPart.substr(2));
                }
                catch (const std::exception&)
                {
                    throw ParseError("malformed power in cyclotomic literal: \"" + raw + "\"");
                }
            }
            else
            {
                throw ParseError("malformed term in cyclotomic literal: \"" + raw + "\"");
            }
        }
        const Rational c = parseRational(coeffPart);
        CycNum zp = zetaPow(power);
        for (int j = 0; j < 8; ++j)
            out.coeffs[j] += c * zp.coeffs[j];
    }
    return out;
}

}  // namespace talg
