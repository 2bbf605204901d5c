#include "talg/rational.hpp"

#include <cctype>

namespace talg {

std::string toString(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational parseRational(const std::string& text)
{
    // Trim whitespace, allow one leading sign, then digits with an optional
    // "/digits" part; GMP does the actual bignum conversion.
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
        begin++;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
        end--;
    if (begin == end)
        throw ParseError("empty rational literal");

    std::string body = text.substr(begin, end - begin);
    std::size_t pos = 0;
    bool negative = false;
    if (body[pos] == '+' || body[pos] == '-')
    {
        negative = (body[pos] == '-');
        pos++;
    }
    std::string numDigits, denDigits;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos])))
        numDigits += body[pos++];
    if (numDigits.empty())
        throw ParseError("malformed rational literal: \"" + body + "\"");
    if (pos < body.size())
    {
        if (body[pos] != '/')
            throw ParseError("malformed rational literal: \"" + body + "\"");
        pos++;
        while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos])))
            denDigits += body[pos++];
        if (denDigits.empty() || pos != body.size())
            throw ParseError("malformed rational literal: \"" + body + "\"");
    }

    Integer num(numDigits);
    Integer den = denDigits.empty() ? Integer(1) : Integer(denDigits);
    if (den == 0)
        throw ParseError("zero denominator in rational literal: \"" + body + "\"");
    if (negative)
        num = -num;
    return Rational(num, den);
}

Integer integerSqrt(const Integer& n)
{
    if (n < 0)
        throw Error("integerSqrt of a negative integer");
    return boost::multiprecision::sqrt(n);
}

std::optional<Integer> exactSqrt(const Integer& n)
{
    if (n < 0)
        return std::nullopt;
    Integer s = boost::multiprecision::sqrt(n);
    if (s * s == n)
        return s;
    return std::nullopt;
}

double toDouble(const Rational& r)
{
    return r.convert_to<double>();
}

}  // namespace talg
