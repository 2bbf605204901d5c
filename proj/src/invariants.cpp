/**
 * Implementation of the bivariate invariant-theory toolkit.
 */
#include "talg/invariants.hpp"

#include <sstream>

#include "talg/errors.hpp"
#include "talg/linalg.hpp"
#include "talg/parallel.hpp"

namespace talg {

BivarPoly BivarPoly::monomial(int xPow, int yPow, const CycNum& coeff)
{
    BivarPoly p;
    p.addTerm(xPow, yPow, coeff);
    return p;
}

bool BivarPoly::isZero() const
{
    return this->terms.empty();
}

int BivarPoly::totalDegree() const
{
    int best = -1;
    for (const auto& term : this->terms)
    {
        const int d = term.first.first + term.first.second;
        if (d > best)
        {
            best = d;
        }
    }
    return best;
}

bool BivarPoly::isHomogeneous() const
{
    int seen = -1;
    for (const auto& term : this->terms)
    {
        const int d = term.first.first + term.first.second;
        if (seen < 0)
        {
            seen = d;
        }
        else if (d != seen)
        {
            return false;
        }
    }
    return true;
}

CycNum BivarPoly::coefficient(int xPow, int yPow) const
{
    const auto it = this->terms.find(std::make_pair(xPow, yPow));
    return it == this->terms.end() ? CycNum(0) : it->second;
}

void BivarPoly::addTerm(int xPow, int yPow, const CycNum& coeff)
{
    if (coeff.isZero())
    {
        return;
    }
    if (xPow < 0 || yPow < 0)
    {
        throw Error("monomial exponents must be nonnegative");
    }
    const std::pair<int, int> key(xPow, yPow);
    auto it = this->terms.find(key);
    if (it == this->terms.end())
    {
        this->terms.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.isZero())
    {
        this->terms.erase(it);
    }
}

BivarPoly BivarPoly::operator+(const BivarPoly& other) const
{
    BivarPoly out(*this);
    for (const auto& term : other.terms)
    {
        out.addTerm(term.first.first, term.first.second, term.second);
    }
    return out;
}

BivarPoly BivarPoly::operator-(const BivarPoly& other) const
{
    BivarPoly out(*this);
    for (const auto& term : other.terms)
    {
        out.addTerm(term.first.first, term.first.second, -term.second);
    }
    return out;
}

BivarPoly BivarPoly::operator*(const BivarPoly& other) const
{
    BivarPoly out;
    for (const auto& a : this->terms)
    {
        for (const auto& b : other.terms)
        {
            out.addTerm(a.first.first + b.first.first, a.first.second + b.first.second,
                        a.second * b.second);
        }
    }
    return out;
}

BivarPoly BivarPoly::scaled(const CycNum& c) const
{
    BivarPoly out;
    for (const auto& term : this->terms)
    {
        out.addTerm(term.first.first, term.first.second, term.second * c);
    }
    return out;
}

bool BivarPoly::operator==(const BivarPoly& other) const
{
    return this->terms == other.terms;
}

bool BivarPoly::operator!=(const BivarPoly& other) const
{
    return !(*this == other);
}

BivarPoly BivarPoly::derivativeX() const
{
    BivarPoly out;
    for (const auto& term : this->terms)
    {
        if (term.first.first > 0)
        {
            out.addTerm(term.first.first - 1, term.first.second,
                        Rational(term.first.first) * term.second);
        }
    }
    return out;
}

BivarPoly BivarPoly::derivativeY() const
{
    BivarPoly out;
    for (const auto& term : this->terms)
    {
        if (term.first.second > 0)
        {
            out.addTerm(term.first.first, term.first.second - 1,
                        Rational(term.first.second) * term.second);
        }
    }
    return out;
}

namespace {

std::string monomialText(int a, int b)
{
    std::string out;
    if (a == 1)
    {
        out += "x";
    }
    else if (a > 1)
    {
        out += "x^" + std::to_string(a);
    }
    if (b > 0)
    {
        if (!out.empty())
        {
            out += "*";
        }
        if (b == 1)
        {
            out += "y";
        }
        else
        {
            out += "y^" + std::to_string(b);
        }
    }
    return out;
}

}  // namespace

std::string BivarPoly::toString() const
{
    if (this->terms.empty())
    {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& term : this->terms)
    {
        const std::string mono = monomialText(term.first.first, term.first.second);
        const CycNum& c = term.second;
        std::string coeffText;
        bool negative = false;
        if (c.isRational())
        {
            Rational r = *c.asRational();
            if (r < 0)
            {
                negative = true;
                r = -r;
            }
            if (r != 1 || mono.empty())
            {
                coeffText = talg::toString(r);
            }
        }
        else
        {
            coeffText = "(" + c.toString() + ")";
        }
        if (first)
        {
            if (negative)
            {
                out << "-";
            }
            first = false;
        }
        else
        {
            out << (negative ? " - " : " + ");
        }
        if (!coeffText.empty())
        {
            out << coeffText;
            if (!mono.empty())
            {
                out << "*";
            }
        }
        out << mono;
    }
    return out.str();
}

BivarPoly actOn(const BivarPoly& p, const Mat2& sigma)
{
    int maxX = 0;
    int maxY = 0;
    for (const auto& term : p.terms)
    {
        maxX = std::max(maxX, term.first.first);
        maxY = std::max(maxY, term.first.second);
    }
    const int maxPow = std::max(maxX, maxY);

    // Powers of the four substitution coefficients.
    std::vector<CycNum> p00{CycNum(1)};
    std::vector<CycNum> p01{CycNum(1)};
    std::vector<CycNum> p10{CycNum(1)};
    std::vector<CycNum> p11{CycNum(1)};
    for (int k = 1; k <= maxPow; ++k)
    {
        p00.push_back(p00.back() * sigma(0, 0));
        p01.push_back(p01.back() * sigma(0, 1));
        p10.push_back(p10.back() * sigma(1, 0));
        p11.push_back(p11.back() * sigma(1, 1));
    }

    // Binomial coefficients up to maxPow.
    std::vector<std::vector<Integer> > choose(maxPow + 1);
    for (int nn = 0; nn <= maxPow; ++nn)
    {
        choose[nn].assign(nn + 1, Integer(1));
        for (int k = 1; k < nn; ++k)
        {
            choose[nn][k] = choose[nn - 1][k - 1] + choose[nn - 1][k];
        }
    }

    // x -> s00 x + s01 y and y -> s10 x + s11 y, expanded binomially.
    BivarPoly out;
    for (const auto& term : p.terms)
    {
        const int a = term.first.first;
        const int b = term.first.second;
        for (int t = 0; t <= a; ++t)
        {
            const CycNum left = Rational(choose[a][t]) * (p00[t] * p01[a - t]);
            for (int u = 0; u <= b; ++u)
            {
                const CycNum right = Rational(choose[b][u]) * (p10[u] * p11[b - u]);
                out.addTerm(t + u, (a - t) + (b - u), term.second * left * right);
            }
        }
    }
    return out;
}

BivarPoly reynolds(const BivarPoly& p, const MatGroup& group, int threads)
{
    const std::vector<BivarPoly> images = parallelMap<BivarPoly>(
        group.elements.size(), threads,
        [&](std::size_t g) { return actOn(p, group.elements[g]); });
    BivarPoly sum;
    for (const BivarPoly& image : images)
    {
        sum = sum + image;
    }
    return sum.scaled(CycNum(Rational(1, group.order())));
}

bool isInvariant(const BivarPoly& p, const MatGroup& group)
{
    for (const Mat2& g : group.generators)
    {
        if (actOn(p, g) != p)
        {
            return false;
        }
    }
    return true;
}

BivarPoly ePolynomial(const MatGroup& group, int k, int threads)
{
    if (k < 0)
    {
        throw Error("E-polynomial degree must be nonnegative");
    }
    const BivarPoly phi = reynolds(BivarPoly::monomial(k, 0, CycNum(1)), group, threads);
    if (!isInvariant(phi, group))
    {
        throw ConsistencyError("Reynolds average of x^" + std::to_string(k)
                               + " is not invariant");
    }
    return phi;
}

std::vector<Integer> molienSeries(const MatGroup& group, int terms, int threads)
{
    if (terms < 1)
    {
        throw Error("molienSeries requires at least one term");
    }

    // Per element, 1/det(I - t g) = 1/(1 - tr(g) t + det(g) t^2) expands by
    // u_0 = 1, u_1 = tr, u_k = tr u_{k-1} - det u_{k-2}.
    const std::vector<std::vector<CycNum> > expansions =
        parallelMap<std::vector<CycNum> >(
            group.elements.size(), threads,
            [&](std::size_t g)
            {
                const Mat2& mat = group.elements[g];
                const CycNum tr = mat(0, 0) + mat(1, 1);
                const CycNum det = mat2Determinant(mat);
                std::vector<CycNum> u(terms);
                for (int k = 0; k < terms; ++k)
                {
                    if (k == 0)
                    {
                        u[k] = CycNum(1);
                    }
                    else if (k == 1)
                    {
                        u[k] = tr;
                    }
                    else
                    {
                        u[k] = tr * u[k - 1] - det * u[k - 2];
                    }
                }
                return u;
            });

    std::vector<Integer> coeffs(terms);
    const Rational scale(1, group.order());
    for (int k = 0; k < terms; ++k)
    {
        CycNum total(0);
        for (const std::vector<CycNum>& u : expansions)
        {
            total += u[k];
        }
        total = scale * total;
        if (!total.isRational())
        {
            throw ConsistencyError("Molien coefficient " + std::to_string(k)
                                   + " is not rational");
        }
        const Rational value = *total.asRational();
        if (denominator(value) != 1 || value < 0)
        {
            throw ConsistencyError("Molien coefficient " + std::to_string(k)
                                   + " is not a nonnegative integer: " + toString(value));
        }
        coeffs[k] = numerator(value);
    }

    // Independent cross-check in low degrees: the invariant space of degree
    // k is spanned by the Reynolds images of the k+1 monomials.
    const int checkUpTo = std::min(terms - 1, 12);
    for (int k = 0; k <= checkUpTo; ++k)
    {
        SpanTracker<CycNum> span(k + 1);
        for (int a = 0; a <= k; ++a)
        {
            const BivarPoly image =
                reynolds(BivarPoly::monomial(a, k - a, CycNum(1)), group, threads);
            CycVector v = CycVector::Constant(k + 1, CycNum(0));
            for (int j = 0; j <= k; ++j)
            {
                v(j) = image.coefficient(j, k - j);
            }
            span.add(v);
        }
        if (Integer(span.rank()) != coeffs[k])
        {
            throw ConsistencyError("Molien coefficient " + std::to_string(k)
                                   + " disagrees with the Reynolds image rank");
        }
    }
    return coeffs;
}

std::vector<Integer> expandProductSeries(int a, int b, int terms)
{
    if (a < 1 || b < 1 || terms < 1)
    {
        throw Error("expandProductSeries requires positive degrees and terms");
    }
    std::vector<Integer> coeffs(terms, Integer(0));
    for (int mA = 0; mA * a < terms; ++mA)
    {
        for (int nB = 0; mA * a + nB * b < terms; ++nB)
        {
            coeffs[mA * a + nB * b] += 1;
        }
    }
    return coeffs;
}

BivarPoly jacobian(const BivarPoly& f, const BivarPoly& g)
{
    return f.derivativeX() * g.derivativeY() - f.derivativeY() * g.derivativeX();
}

std::optional<std::vector<GeneratorTerm> > expressInGenerators(const BivarPoly& target,
                                                               const BivarPoly& f,
                                                               const BivarPoly& g)
{
    if (!f.isHomogeneous() || !g.isHomogeneous() || f.totalDegree() < 1 || g.totalDegree() < 1)
    {
        throw Error("generators must be nonconstant homogeneous polynomials");
    }
    if (!target.isHomogeneous())
    {
        throw Error("target of expressInGenerators must be homogeneous");
    }
    if (target.isZero())
    {
        return std::vector<GeneratorTerm>();
    }
    const int d = target.totalDegree();
    const int degF = f.totalDegree();
    const int degG = g.totalDegree();

    std::vector<std::pair<int, int> > combos;
    for (int mF = 0; mF * degF <= d; ++mF)
    {
        const int rest = d - mF * degF;
        if (rest % degG == 0)
        {
            combos.emplace_back(mF, rest / degG);
        }
    }
    if (combos.empty())
    {
        return std::nullopt;
    }

    int maxF = 0;
    int maxG = 0;
    for (const std::pair<int, int>& combo : combos)
    {
        maxF = std::max(maxF, combo.first);
        maxG = std::max(maxG, combo.second);
    }
    std::vector<BivarPoly> fPow{BivarPoly::monomial(0, 0, CycNum(1))};
    for (int k = 1; k <= maxF; ++k)
    {
        fPow.push_back(fPow.back() * f);
    }
    std::vector<BivarPoly> gPow{BivarPoly::monomial(0, 0, CycNum(1))};
    for (int k = 1; k <= maxG; ++k)
    {
        gPow.push_back(gPow.back() * g);
    }

    CycMatrix system = CycMatrix::Constant(d + 1, combos.size(), CycNum(0));
    for (std::size_t col = 0; col < combos.size(); ++col)
    {
        const BivarPoly prod = fPow[combos[col].first] * gPow[combos[col].second];
        for (int j = 0; j <= d; ++j)
        {
            system(j, col) = prod.coefficient(j, d - j);
        }
    }
    CycVector rhs = CycVector::Constant(d + 1, CycNum(0));
    for (int j = 0; j <= d; ++j)
    {
        rhs(j) = target.coefficient(j, d - j);
    }

    const std::optional<CycVector> solution = solveLinear<CycNum>(system, rhs);
    if (!solution.has_value())
    {
        return std::nullopt;
    }
    std::vector<GeneratorTerm> out;
    for (std::size_t col = 0; col < combos.size(); ++col)
    {
        if (!(*solution)(col).isZero())
        {
            out.push_back(GeneratorTerm{combos[col].first, combos[col].second,
                                        (*solution)(col)});
        }
    }
    return out;
}

bool GenerationCertificate::holds() const
{
    return this->fInvariant && this->gInvariant && this->jacobianNonzero
           && this->degreeProductMatchesOrder && this->molienMatch;
}

GenerationCertificate verifyGeneration(const MatGroup& group, const BivarPoly& f,
                                       const BivarPoly& g, int terms, int threads)
{
    if (!f.isHomogeneous() || !g.isHomogeneous() || f.totalDegree() < 1 || g.totalDegree() < 1)
    {
        throw Error("generators must be nonconstant homogeneous polynomials");
    }
    GenerationCertificate cert;
    cert.degF = f.totalDegree();
    cert.degG = g.totalDegree();
    cert.fInvariant = isInvariant(f, group);
    cert.gInvariant = isInvariant(g, group);
    cert.jacobianNonzero = !jacobian(f, g).isZero();
    cert.degreeProduct = cert.degF * cert.degG;
    cert.degreeProductMatchesOrder = (cert.degreeProduct == group.order());
    cert.terms = terms;
    const std::vector<Integer> molien = molienSeries(group, terms, threads);
    const std::vector<Integer> product =
        expandProductSeries(static_cast<int>(cert.degF), static_cast<int>(cert.degG), terms);
    cert.molienMatch = (molien == product);
    return cert;
}

}  // namespace talg
