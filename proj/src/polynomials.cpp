/**
 * Implementation of exact univariate polynomial arithmetic and the
 * numeric-assisted (but exactly verified) factorization over Q.
 */
#include "talg/polynomials.hpp"

#include <algorithm>
#include <sstream>

#include "talg/errors.hpp"

namespace talg {

int degree(const RatPoly& p)
{
    return static_cast<int>(p.size()) - 1;
}

RatPoly trimPoly(RatPoly p)
{
    while (!p.empty() && p.back() == 0)
    {
        p.pop_back();
    }
    return p;
}

RatPoly addPoly(const RatPoly& a, const RatPoly& b)
{
    RatPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t k = 0; k < a.size(); ++k)
    {
        out[k] += a[k];
    }
    for (std::size_t k = 0; k < b.size(); ++k)
    {
        out[k] += b[k];
    }
    return trimPoly(out);
}

RatPoly subPoly(const RatPoly& a, const RatPoly& b)
{
    RatPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t k = 0; k < a.size(); ++k)
    {
        out[k] += a[k];
    }
    for (std::size_t k = 0; k < b.size(); ++k)
    {
        out[k] -= b[k];
    }
    return trimPoly(out);
}

RatPoly mulPoly(const RatPoly& a, const RatPoly& b)
{
    if (a.empty() || b.empty())
    {
        return RatPoly();
    }
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a[i] == 0)
        {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j)
        {
            out[i + j] += a[i] * b[j];
        }
    }
    return trimPoly(out);
}

RatPoly scalePoly(const RatPoly& a, const Rational& c)
{
    if (c == 0)
    {
        return RatPoly();
    }
    RatPoly out(a);
    for (Rational& v : out)
    {
        v *= c;
    }
    return out;
}

std::pair<RatPoly, RatPoly> divModPoly(const RatPoly& a, const RatPoly& b)
{
    if (b.empty())
    {
        throw DivisionByZeroError("polynomial division by zero");
    }
    RatPoly rem(a);
    if (degree(a) < degree(b))
    {
        return std::make_pair(RatPoly(), rem);
    }
    RatPoly quot(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    for (int k = degree(rem); k >= degree(b); --k)
    {
        if (rem[k] == 0)
        {
            continue;
        }
        const Rational factor = rem[k] / lead;
        const int shift = k - degree(b);
        quot[shift] = factor;
        for (std::size_t j = 0; j < b.size(); ++j)
        {
            rem[shift + j] -= factor * b[j];
        }
    }
    return std::make_pair(trimPoly(quot), trimPoly(rem));
}

RatPoly monicPoly(const RatPoly& p)
{
    if (p.empty())
    {
        return p;
    }
    return scalePoly(p, Rational(1) / p.back());
}

RatPoly gcdPoly(const RatPoly& a, const RatPoly& b)
{
    RatPoly f(trimPoly(a));
    RatPoly g(trimPoly(b));
    while (!g.empty())
    {
        RatPoly r = divModPoly(f, g).second;
        f = g;
        g = r;
    }
    return monicPoly(f);
}

std::tuple<RatPoly, RatPoly, RatPoly> extendedGcdPoly(const RatPoly& a, const RatPoly& b)
{
    // Invariants: u0*a + v0*b = f and u1*a + v1*b = g throughout.
    RatPoly f(trimPoly(a));
    RatPoly g(trimPoly(b));
    RatPoly u0{Rational(1)};
    RatPoly v0;
    RatPoly u1;
    RatPoly v1{Rational(1)};
    while (!g.empty())
    {
        std::pair<RatPoly, RatPoly> qr = divModPoly(f, g);
        RatPoly u2 = subPoly(u0, mulPoly(qr.first, u1));
        RatPoly v2 = subPoly(v0, mulPoly(qr.first, v1));
        f = g;
        g = qr.second;
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    if (f.empty())
    {
        return std::make_tuple(RatPoly(), RatPoly(), RatPoly());
    }
    const Rational scale = Rational(1) / f.back();
    return std::make_tuple(scalePoly(f, scale), scalePoly(u0, scale), scalePoly(v0, scale));
}

RatPoly derivativePoly(const RatPoly& p)
{
    if (p.size() < 2)
    {
        return RatPoly();
    }
    RatPoly out(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k)
    {
        out[k - 1] = Rational(static_cast<long>(k)) * p[k];
    }
    return trimPoly(out);
}

RatPoly squarefreePart(const RatPoly& p)
{
    if (degree(p) < 1)
    {
        return monicPoly(p);
    }
    RatPoly g = gcdPoly(p, derivativePoly(p));
    return monicPoly(divModPoly(p, g).first);
}

Rational evaluatePoly(const RatPoly& p, const Rational& x)
{
    Rational acc(0);
    for (std::size_t k = p.size(); k > 0; --k)
    {
        acc = acc * x + p[k - 1];
    }
    return acc;
}

CycNum evaluatePolyCyc(const RatPoly& p, const CycNum& x)
{
    CycNum acc(0);
    for (std::size_t k = p.size(); k > 0; --k)
    {
        acc = acc * x + CycNum(p[k - 1]);
    }
    return acc;
}

RatMatrix evaluatePolyMatrix(const RatPoly& p, const RatMatrix& m)
{
    const long n = m.rows();
    RatMatrix acc = RatMatrix::Zero(n, n);
    for (std::size_t k = p.size(); k > 0; --k)
    {
        acc = acc * m;
        for (long d = 0; d < n; ++d)
        {
            acc(d, d) += p[k - 1];
        }
    }
    return acc;
}

RatPoly charPoly(const RatMatrix& m)
{
    const long n = m.rows();
    if (n != m.cols())
    {
        throw DimensionMismatchError("characteristic polynomial of a non-square matrix");
    }
    RatPoly coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    coeffs[n] = 1;
    if (n == 0)
    {
        return coeffs;
    }
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    RatMatrix M = m;
    coeffs[n - 1] = -M.trace();
    for (long k = 2; k <= n; ++k)
    {
        RatMatrix shifted = M;
        for (long d = 0; d < n; ++d)
        {
            shifted(d, d) += coeffs[n - k + 1];
        }
        M = m * shifted;
        coeffs[n - k] = -M.trace() / Rational(k);
    }
    return coeffs;
}

std::string polyToString(const RatPoly& p)
{
    if (p.empty())
    {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int k = degree(p); k >= 0; --k)
    {
        if (p[k] == 0)
        {
            continue;
        }
        Rational c = p[k];
        if (first)
        {
            if (c < 0)
            {
                out << "-";
                c = -c;
            }
            first = false;
        }
        else
        {
            if (c < 0)
            {
                out << " - ";
                c = -c;
            }
            else
            {
                out << " + ";
            }
        }
        if (k == 0 || c != 1)
        {
            out << toString(c);
            if (k > 0)
            {
                out << "*";
            }
        }
        if (k == 1)
        {
            out << "x";
        }
        else if (k > 1)
        {
            out << "x^" << k;
        }
    }
    return out.str();
}

std::optional<Rational> rationalReconstruct(const BigFloat& value,
                                            const Integer& denominatorBound,
                                            const BigFloat& tolerance)
{
    // Continued-fraction convergents p/q of the value, accepted as soon as
    // one lands within tolerance without exceeding the denominator bound.
    BigFloat x = value;
    Integer p0(1);
    Integer q0(0);
    Integer p1;
    Integer q1(1);
    {
        const BigFloat fl = floor(x);
        p1 = fl.convert_to<Integer>();
    }
    BigFloat frac = x - floor(x);
    for (int iter = 0; iter < 256; ++iter)
    {
        if (q1 > denominatorBound)
        {
            return std::nullopt;
        }
        const Rational cand = Rational(p1) / Rational(q1);
        BigFloat candF = BigFloat(numerator(cand).str()) / BigFloat(denominator(cand).str());
        BigFloat err = value - candF;
        if (err < 0)
        {
            err = -err;
        }
        if (err <= tolerance)
        {
            return cand;
        }
        if (frac == 0)
        {
            return std::nullopt;
        }
        x = 1 / frac;
        const BigFloat fl = floor(x);
        const Integer a = fl.convert_to<Integer>();
        frac = x - fl;
        const Integer p2 = a * p1 + p0;
        const Integer q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return std::nullopt;
}

namespace {

/** Minimal complex arithmetic on variable-precision reals. */
struct ComplexBig
{
    BigFloat re;
    BigFloat im;
};

ComplexBig operator+(const ComplexBig& a, const ComplexBig& b)
{
    return ComplexBig{a.re + b.re, a.im + b.im};
}

ComplexBig operator-(const ComplexBig& a, const ComplexBig& b)
{
    return ComplexBig{a.re - b.re, a.im - b.im};
}

ComplexBig operator*(const ComplexBig& a, const ComplexBig& b)
{
    return ComplexBig{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBig operator/(const ComplexBig& a, const ComplexBig& b)
{
    const BigFloat n = b.re * b.re + b.im * b.im;
    return ComplexBig{(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

BigFloat absSquared(const ComplexBig& a)
{
    return a.re * a.re + a.im * a.im;
}

BigFloat toBigFloat(const Rational& r)
{
    return BigFloat(numerator(r).str()) / BigFloat(denominator(r).str());
}

ComplexBig evaluateComplex(const std::vector<ComplexBig>& coeffs, const ComplexBig& x)
{
    ComplexBig acc{BigFloat(0), BigFloat(0)};
    for (std::size_t k = coeffs.size(); k > 0; --k)
    {
        acc = acc * x + coeffs[k - 1];
    }
    return acc;
}

}  // namespace

std::vector<std::pair<BigFloat, BigFloat> > complexRoots(const RatPoly& p, unsigned precisionBits)
{
    const RatPoly q = monicPoly(trimPoly(p));
    const int n = degree(q);
    if (n < 1)
    {
        return std::vector<std::pair<BigFloat, BigFloat> >();
    }

    const unsigned savedDigits = BigFloat::default_precision();
    const unsigned digits = static_cast<unsigned>(precisionBits * 0.30103) + 10;
    BigFloat::default_precision(digits);

    std::vector<ComplexBig> coeffs(q.size());
    BigFloat maxAbs(0);
    for (std::size_t k = 0; k < q.size(); ++k)
    {
        coeffs[k] = ComplexBig{toBigFloat(q[k]), BigFloat(0)};
        BigFloat a = coeffs[k].re;
        if (a < 0)
        {
            a = -a;
        }
        if (k + 1 < q.size() && a > maxAbs)
        {
            maxAbs = a;
        }
    }
    // Cauchy bound: all roots lie within radius 1 + max |a_k|.
    const BigFloat radius = 1 + maxAbs;

    // Durand-Kerner from non-real, non-uniform starting points.
    std::vector<ComplexBig> roots(static_cast<std::size_t>(n));
    {
        ComplexBig seed{BigFloat("0.4"), BigFloat("0.9")};
        ComplexBig acc{BigFloat(1), BigFloat(0)};
        for (int j = 0; j < n; ++j)
        {
            acc = acc * seed;
            roots[j] = ComplexBig{acc.re * radius, acc.im * radius};
        }
    }

    BigFloat stop = ldexp(BigFloat(1), -static_cast<int>(precisionBits * 3 / 4));
    stop = stop * stop;
    for (int iter = 0; iter < 1000; ++iter)
    {
        BigFloat worst(0);
        for (int j = 0; j < n; ++j)
        {
            ComplexBig denom{BigFloat(1), BigFloat(0)};
            for (int k = 0; k < n; ++k)
            {
                if (k != j)
                {
                    denom = denom * (roots[j] - roots[k]);
                }
            }
            const ComplexBig delta = evaluateComplex(coeffs, roots[j]) / denom;
            roots[j] = roots[j] - delta;
            const BigFloat d2 = absSquared(delta);
            if (d2 > worst)
            {
                worst = d2;
            }
        }
        if (worst < stop)
        {
            break;
        }
    }

    std::vector<std::pair<BigFloat, BigFloat> > out;
    out.reserve(roots.size());
    for (const ComplexBig& r : roots)
    {
        out.push_back(std::make_pair(r.re, r.im));
    }
    std::sort(out.begin(), out.end(),
              [](const std::pair<BigFloat, BigFloat>& a, const std::pair<BigFloat, BigFloat>& b)
              {
                  if (a.first != b.first)
                  {
                      return a.first < b.first;
                  }
                  return a.second < b.second;
              });
    BigFloat::default_precision(savedDigits);
    return out;
}

namespace {

/**
 * Factor a squarefree monic polynomial into monic irreducibles by numeric
 * root clustering.  Sound because every candidate is checked by exact
 * division; complete because a true factor's roots always form one of the
 * enumerated subsets.
 */
std::vector<RatPoly> factorSquarefreeMonic(RatPoly g)
{
    std::vector<RatPoly> out;
    const Integer denomBound = (Integer(1) << 64);

    // Degree-1 factors: reconstruct each near-real root as a rational and
    // verify by exact evaluation.
    bool progress = true;
    while (progress && degree(g) > 1)
    {
        progress = false;
        const std::vector<std::pair<BigFloat, BigFloat> > roots = complexRoots(g, 512);
        const BigFloat tol = ldexp(BigFloat(1), -128);
        for (const std::pair<BigFloat, BigFloat>& root : roots)
        {
            BigFloat imAbs = root.second;
            if (imAbs < 0)
            {
                imAbs = -imAbs;
            }
            if (imAbs > tol)
            {
                continue;
            }
            const std::optional<Rational> cand = rationalReconstruct(root.first, denomBound, tol);
            if (!cand.has_value() || evaluatePoly(g, *cand) != 0)
            {
                continue;
            }
            RatPoly linear{-*cand, Rational(1)};
            out.push_back(linear);
            g = divModPoly(g, linear).first;
            progress = true;
            break;
        }
    }
    if (degree(g) == 1)
    {
        out.push_back(monicPoly(g));
        return out;
    }
    if (degree(g) <= 0)
    {
        return out;
    }

    // Higher-degree factors: expand candidate factors from subsets of the
    // numeric roots, smallest subsets first, so every factor found is
    // irreducible.  All subsets failing exact division proves irreducibility.
    while (degree(g) > 1)
    {
        const int n = degree(g);
        if (n > 24)
        {
            throw SplittingError("root-cluster factorization limited to degree 24, got degree "
                                 + std::to_string(n));
        }
        const std::vector<std::pair<BigFloat, BigFloat> > roots = complexRoots(g, 512);
        const BigFloat tol = ldexp(BigFloat(1), -128);
        RatPoly found;
        for (int size = 2; size < n && found.empty(); ++size)
        {
            for (unsigned long mask = 0; mask < (1ul << n) && found.empty(); ++mask)
            {
                if (__builtin_popcountl(mask) != size)
                {
                    continue;
                }
                // Expand prod_{j in mask} (x - root_j) numerically.
                std::vector<ComplexBig> cand{ComplexBig{BigFloat(1), BigFloat(0)}};
                for (int j = 0; j < n; ++j)
                {
                    if (!(mask & (1ul << j)))
                    {
                        continue;
                    }
                    const ComplexBig r{roots[j].first, roots[j].second};
                    std::vector<ComplexBig> next(cand.size() + 1, ComplexBig{BigFloat(0), BigFloat(0)});
                    for (std::size_t k = 0; k < cand.size(); ++k)
                    {
                        next[k + 1] = next[k + 1] + cand[k];
                        next[k] = next[k] - cand[k] * r;
                    }
                    cand = next;
                }
                RatPoly exact(cand.size());
                bool ok = true;
                for (std::size_t k = 0; k < cand.size() && ok; ++k)
                {
                    BigFloat imAbs = cand[k].im;
                    if (imAbs < 0)
                    {
                        imAbs = -imAbs;
                    }
                    if (imAbs > tol)
                    {
                        ok = false;
                        break;
                    }
                    const std::optional<Rational> c =
                        rationalReconstruct(cand[k].re, denomBound, tol);
                    if (!c.has_value())
                    {
                        ok = false;
                        break;
                    }
                    exact[k] = *c;
                }
                if (!ok)
                {
                    continue;
                }
                const std::pair<RatPoly, RatPoly> qr = divModPoly(g, exact);
                if (qr.second.empty())
                {
                    found = exact;
                    g = qr.first;
                }
            }
        }
        if (found.empty())
        {
            out.push_back(monicPoly(g));
            return out;
        }
        out.push_back(found);
    }
    if (degree(g) == 1)
    {
        out.push_back(monicPoly(g));
    }
    return out;
}

}  // namespace

std::vector<RatPoly> factorOverQ(const RatPoly& p)
{
    RatPoly work = monicPoly(trimPoly(p));
    if (degree(work) < 1)
    {
        throw Error("cannot factor a constant polynomial");
    }
    const RatPoly sf = squarefreePart(work);
    std::vector<RatPoly> distinct = factorSquarefreeMonic(sf);

    // Recover multiplicities by repeated exact division.
    std::vector<RatPoly> factors;
    for (const RatPoly& f : distinct)
    {
        for (;;)
        {
            const std::pair<RatPoly, RatPoly> qr = divModPoly(work, f);
            if (!qr.second.empty())
            {
                break;
            }
            factors.push_back(f);
            work = qr.first;
        }
    }
    if (degree(work) != 0)
    {
        throw ConsistencyError("factorization did not exhaust the polynomial: leftover "
                               + polyToString(work));
    }
    std::sort(factors.begin(), factors.end(),
              [](const RatPoly& a, const RatPoly& b)
              {
                  if (a.size() != b.size())
                  {
                      return a.size() < b.size();
                  }
                  for (std::size_t k = a.size(); k > 0; --k)
                  {
                      if (a[k - 1] != b[k - 1])
                      {
                          return a[k - 1] < b[k - 1];
                      }
                  }
                  return false;
              });
    return factors;
}

std::optional<CycNum> sqrtInCyclotomic(const Rational& r)
{
    if (r == 0)
    {
        return CycNum(0);
    }
    // Q(zeta_24) contains sqrt(s) exactly for squarefree s in {+-1,+-2,+-3,+-6}.
    // Test each candidate s: r/s must be the square of a rational.
    static const int candidates[8] = {1, -1, 2, -2, 3, -3, 6, -6};
    for (int s : candidates)
    {
        const Rational quotient = r / Rational(s);
        if (quotient < 0)
        {
            continue;
        }
        const std::optional<Integer> top = exactSqrt(numerator(quotient));
        if (!top.has_value())
        {
            continue;
        }
        const std::optional<Integer> bottom = exactSqrt(denominator(quotient));
        if (!bottom.has_value())
        {
            continue;
        }
        const Rational scale = Rational(*top) / Rational(*bottom);
        CycNum base(1);
        switch (s)
        {
            case 1:
                base = CycNum(1);
                break;
            case -1:
                base = CycNum::i();
                break;
            case 2:
                base = CycNum::sqrt2();
                break;
            case -2:
                base = CycNum::i() * CycNum::sqrt2();
                break;
            case 3:
                base = CycNum::sqrt3();
                break;
            case -3:
                base = CycNum::i() * CycNum::sqrt3();
                break;
            case 6:
                base = CycNum::sqrt2() * CycNum::sqrt3();
                break;
            case -6:
                base = CycNum::i() * CycNum::sqrt2() * CycNum::sqrt3();
                break;
        }
        const CycNum result = scale * base;
        if (result * result == CycNum(r))
        {
            return result;
        }
    }
    return std::nullopt;
}

}  // namespace talg
