#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "talg/cyclotomic.hpp"
#include "talg/errors.hpp"
#include "talg/polynomials.hpp"

using namespace talg;

namespace {

RatPoly randomPoly(std::mt19937& rng, int maxDegree)
{
    const int deg = static_cast<int>(rng() % (maxDegree + 1));
    RatPoly p(deg + 1);
    for (int i = 0; i <= deg; ++i)
        p[i] = Rational(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 3) + 1);
    return trimPoly(std::move(p));
}

}  // namespace

TEST_CASE("polynomial ring operations")
{
    const RatPoly zero;
    const RatPoly one{Rational(1)};
    const RatPoly x{Rational(0), Rational(1)};
    CHECK(degree(zero) == -1);
    CHECK(degree(one) == 0);
    CHECK(degree(x) == 1);

    // (x + 1)(x - 1) = x^2 - 1.
    const RatPoly xp1{Rational(1), Rational(1)};
    const RatPoly xm1{Rational(-1), Rational(1)};
    const RatPoly prod = mulPoly(xp1, xm1);
    CHECK(prod == RatPoly{Rational(-1), Rational(0), Rational(1)});

    CHECK(addPoly(xp1, xm1) == RatPoly{Rational(0), Rational(2)});
    CHECK(subPoly(xp1, xp1) == zero);
    CHECK(subPoly(xp1, xm1) == RatPoly{Rational(2)});
    CHECK(scalePoly(xp1, Rational(1, 2)) == RatPoly{Rational(1, 2), Rational(1, 2)});
    CHECK(scalePoly(xp1, Rational(0)) == zero);
    CHECK(mulPoly(xp1, zero) == zero);

    // Cancellation of the leading term must trim.
    CHECK(addPoly(x, scalePoly(x, Rational(-1))) == zero);
    CHECK(trimPoly(RatPoly{Rational(3), Rational(0), Rational(0)})
          == RatPoly{Rational(3)});
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial)
    {
        const RatPoly a = randomPoly(rng, 5);
        const RatPoly b = randomPoly(rng, 5);
        const RatPoly c = randomPoly(rng, 5);
        CHECK(addPoly(a, b) == addPoly(b, a));
        CHECK(mulPoly(a, b) == mulPoly(b, a));
        CHECK(mulPoly(a, addPoly(b, c)) == addPoly(mulPoly(a, b), mulPoly(a, c)));
        CHECK(mulPoly(mulPoly(a, b), c) == mulPoly(a, mulPoly(b, c)));
        CHECK(subPoly(addPoly(a, b), b) == a);
    }
}

TEST_CASE("division with remainder")
{
    // x^3 - 2x + 5 = (x^2 + x - 1)(x - 1) + (4).  Check via reconstruction.
    std::mt19937 rng(22);
    for (int trial = 0; trial < 60; ++trial)
    {
        RatPoly a = randomPoly(rng, 6);
        RatPoly b = randomPoly(rng, 3);
        if (degree(b) < 0)
            b = RatPoly{Rational(1, 3)};
        auto [q, r] = divModPoly(a, b);
        CHECK(degree(r) < degree(b));
        CHECK(addPoly(mulPoly(q, b), r) == a);
    }

    const RatPoly a{Rational(5), Rational(-2), Rational(0), Rational(1)};
    const RatPoly b{Rational(-1), Rational(1)};
    auto [q, r] = divModPoly(a, b);
    CHECK(q == RatPoly{Rational(-1), Rational(1), Rational(1)});
    CHECK(r == RatPoly{Rational(4)});

    CHECK_THROWS_AS(divModPoly(a, RatPoly{}), DivisionByZeroError);
}

TEST_CASE("gcd and extended gcd")
{
    // gcd((x-1)(x+2), (x-1)(x-3)) = x - 1.
    const RatPoly f = mulPoly(RatPoly{Rational(-1), Rational(1)},
                              RatPoly{Rational(2), Rational(1)});
    const RatPoly g = mulPoly(RatPoly{Rational(-1), Rational(1)},
                              RatPoly{Rational(-3), Rational(1)});
    CHECK(gcdPoly(f, g) == RatPoly{Rational(-1), Rational(1)});

    // Coprime inputs give gcd 1, with a valid Bezout identity.
    std::mt19937 rng(33);
    for (int trial = 0; trial < 30; ++trial)
    {
        const RatPoly a = randomPoly(rng, 4);
        const RatPoly b = randomPoly(rng, 4);
        if (degree(a) < 0 && degree(b) < 0)
            continue;
        auto [d, u, v] = extendedGcdPoly(a, b);
        CHECK(addPoly(mulPoly(u, a), mulPoly(v, b)) == d);
        if (degree(d) > 0)
        {
            CHECK(divModPoly(a, d).second == RatPoly{});
            CHECK(divModPoly(b, d).second == RatPoly{});
        }
        // Monic leading coefficient.
        CHECK(d.back() == 1);
    }

    CHECK(gcdPoly(RatPoly{}, RatPoly{Rational(0), Rational(7)})
          == RatPoly{Rational(0), Rational(1)});
}

TEST_CASE("derivative, monic and squarefree part")
{
    // d/dx (x^3 - 2x + 5) = 3x^2 - 2.
    const RatPoly p{Rational(5), Rational(-2), Rational(0), Rational(1)};
    CHECK(derivativePoly(p) == RatPoly{Rational(-2), Rational(0), Rational(3)});
    CHECK(derivativePoly(RatPoly{Rational(9)}) == RatPoly{});

    CHECK(monicPoly(RatPoly{Rational(2), Rational(4)})
          == RatPoly{Rational(1, 2), Rational(1)});

    // (x-1)^2 (x+2) has squarefree part (x-1)(x+2) = x^2 + x - 2.
    const RatPoly sq = mulPoly(mulPoly(RatPoly{Rational(-1), Rational(1)},
                                       RatPoly{Rational(-1), Rational(1)}),
                               RatPoly{Rational(2), Rational(1)});
    CHECK(squarefreePart(sq) == RatPoly{Rational(-2), Rational(1), Rational(1)});

    // Already squarefree input is returned monic and unchanged.
    const RatPoly sf{Rational(-2), Rational(0), Rational(1)};
    CHECK(squarefreePart(sf) == sf);
}

TEST_CASE("evaluation at rationals, cyclotomics and matrices")
{
    const RatPoly p{Rational(1), Rational(0), Rational(-3), Rational(1)};  // x^3 - 3x^2 + 1
    CHECK(evaluatePoly(p, Rational(2)) == -3);
    CHECK(evaluatePoly(p, Rational(1, 2)) == Rational(3, 8));
    CHECK(evaluatePoly(RatPoly{}, Rational(7)) == 0);

    // x^2 - 2 vanishes at sqrt2 exactly.
    const RatPoly minimal{Rational(-2), Rational(0), Rational(1)};
    CHECK(evaluatePolyCyc(minimal, CycNum::sqrt2()).isZero());
    CHECK(evaluatePolyCyc(minimal, CycNum(1)) == CycNum(-1));

    // Cayley-Hamilton: charPoly(m) annihilates m.
    RatMatrix m(3, 3);
    m << Rational(1), Rational(2), Rational(0),
         Rational(0), Rational(1), Rational(3),
         Rational(4), Rational(0), Rational(1);
    const RatPoly cp = charPoly(m);
    const RatMatrix image = evaluatePolyMatrix(cp, m);
    CHECK(image == RatMatrix::Constant(3, 3, Rational(0)));

    // Constant polynomial evaluates to c * I.
    CHECK(evaluatePolyMatrix(RatPoly{Rational(5)}, m)
          == RatMatrix(RatMatrix::Identity(3, 3) * Rational(5)));
}

TEST_CASE("characteristic polynomial")
{
    RatMatrix d = RatMatrix::Constant(3, 3, Rational(0));
    d(0, 0) = 1;
    d(1, 1) = 2;
    d(2, 2) = 3;
    // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6.
    CHECK(charPoly(d) == RatPoly{Rational(-6), Rational(11), Rational(-6), Rational(1)});

    // Trace and determinant read off the coefficients, random check.
    std::mt19937 rng(44);
    for (int trial = 0; trial < 10; ++trial)
    {
        RatMatrix m(3, 3);
        for (int r = 0; r < 3; ++r)
        {
            for (int c = 0; c < 3; ++c)
                m(r, c) = Rational(static_cast<int>(rng() % 7) - 3);
        }
        const RatPoly cp = charPoly(m);
        REQUIRE(degree(cp) == 3);
        CHECK(cp[3] == 1);
        CHECK(cp[2] == -(m(0, 0) + m(1, 1) + m(2, 2)));
        CHECK(evaluatePolyMatrix(cp, m) == RatMatrix::Constant(3, 3, Rational(0)));
    }

    CHECK(charPoly(RatMatrix::Identity(1, 1)) == RatPoly{Rational(-1), Rational(1)});
}

TEST_CASE("rational reconstruction from floats")
{
    const BigFloat tol = BigFloat(1) / BigFloat("1e40");
    auto r = rationalReconstruct(BigFloat(1) / BigFloat(3), Integer(1000), tol);
    REQUIRE(r.has_value());
    CHECK(*r == Rational(1, 3));

    auto half = rationalReconstruct(BigFloat("0.5"), Integer(10), tol);
    REQUIRE(half.has_value());
    CHECK(*half == Rational(1, 2));

    auto neg = rationalReconstruct(BigFloat("-2.25"), Integer(100), tol);
    REQUIRE(neg.has_value());
    CHECK(*neg == Rational(-9, 4));

    // sqrt(2) is not close to any rational with a small denominator.
    const BigFloat root2 = sqrt(BigFloat(2));
    CHECK_FALSE(rationalReconstruct(root2, Integer(1000), tol).has_value());

    // Exact integers round-trip.
    auto five = rationalReconstruct(BigFloat(5), Integer(2), tol);
    REQUIRE(five.has_value());
    CHECK(*five == 5);
}

TEST_CASE("complex roots of squarefree polynomials")
{
    // x^2 - 2: roots +-sqrt2, sorted by real part.
    const RatPoly p{Rational(-2), Rational(0), Rational(1)};
    auto roots = complexRoots(p);
    REQUIRE(roots.size() == 2);
    const double s2 = 1.4142135623730951;
    CHECK(static_cast<double>(roots[0].first) == doctest::Approx(-s2).epsilon(1e-12));
    CHECK(static_cast<double>(roots[1].first) == doctest::Approx(s2).epsilon(1e-12));
    CHECK(static_cast<double>(roots[0].second) == doctest::Approx(0.0).epsilon(1e-12));

    // x^2 + 1: roots +-i, sorted by imaginary part.
    auto ri = complexRoots(RatPoly{Rational(1), Rational(0), Rational(1)});
    REQUIRE(ri.size() == 2);
    CHECK(static_cast<double>(ri[0].second) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(static_cast<double>(ri[1].second) == doctest::Approx(1.0).epsilon(1e-12));

    // Degree 4 with known roots 1, 2, 3, 4.
    RatPoly quartic{Rational(1)};
    for (int k = 1; k <= 4; ++k)
        quartic = mulPoly(quartic, RatPoly{Rational(-k), Rational(1)});
    auto rq = complexRoots(quartic);
    REQUIRE(rq.size() == 4);
    for (int k = 0; k < 4; ++k)
        CHECK(static_cast<double>(rq[k].first) == doctest::Approx(k + 1).epsilon(1e-12));
}

TEST_CASE("factorization over the rationals")
{
    const RatPoly xm1{Rational(-1), Rational(1)};
    const RatPoly xp1{Rational(1), Rational(1)};
    const RatPoly xp2{Rational(2), Rational(1)};

    // x^2 - 1 = (x - 1)(x + 1).
    auto f1 = factorOverQ(RatPoly{Rational(-1), Rational(0), Rational(1)});
    REQUIRE(f1.size() == 2);
    CHECK(std::count(f1.begin(), f1.end(), xm1) == 1);
    CHECK(std::count(f1.begin(), f1.end(), xp1) == 1);

    // x^2 + 1 and x^2 - 2 are irreducible.
    auto f2 = factorOverQ(RatPoly{Rational(1), Rational(0), Rational(1)});
    REQUIRE(f2.size() == 1);
    CHECK(f2[0] == RatPoly{Rational(1), Rational(0), Rational(1)});
    auto f3 = factorOverQ(RatPoly{Rational(-2), Rational(0), Rational(1)});
    REQUIRE(f3.size() == 1);
    CHECK(f3[0] == RatPoly{Rational(-2), Rational(0), Rational(1)});

    // Multiplicities: (x-1)^2 (x+2).
    auto f4 = factorOverQ(mulPoly(mulPoly(xm1, xm1), xp2));
    REQUIRE(f4.size() == 3);
    CHECK(std::count(f4.begin(), f4.end(), xm1) == 2);
    CHECK(std::count(f4.begin(), f4.end(), xp2) == 1);

    // A non-monic input factors the same way (leading coefficient dropped).
    auto f5 = factorOverQ(scalePoly(mulPoly(xm1, xp1), Rational(6, 5)));
    REQUIRE(f5.size() == 2);
    CHECK(std::count(f5.begin(), f5.end(), xm1) == 1);

    // Rational roots with denominators: (2x - 1)(3x + 2) -> monic factors.
    const RatPoly g = mulPoly(RatPoly{Rational(-1), Rational(2)},
                              RatPoly{Rational(2), Rational(3)});
    auto f6 = factorOverQ(g);
    REQUIRE(f6.size() == 2);
    CHECK(std::count(f6.begin(), f6.end(), RatPoly{Rational(-1, 2), Rational(1)}) == 1);
    CHECK(std::count(f6.begin(), f6.end(), RatPoly{Rational(2, 3), Rational(1)}) == 1);

    // x^4 + 1 is irreducible over Q (no rational roots, no quadratic split
    // with rational coefficients).
    auto f7 = factorOverQ(RatPoly{Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)});
    REQUIRE(f7.size() == 1);
    CHECK(degree(f7[0]) == 4);

    // x^4 - 4 = (x^2 - 2)(x^2 + 2).
    auto f8 = factorOverQ(RatPoly{Rational(-4), Rational(0), Rational(0), Rational(0), Rational(1)});
    REQUIRE(f8.size() == 2);
    CHECK(std::count(f8.begin(), f8.end(), RatPoly{Rational(-2), Rational(0), Rational(1)}) == 1);
    CHECK(std::count(f8.begin(), f8.end(), RatPoly{Rational(2), Rational(0), Rational(1)}) == 1);

    // Product of all factors (made monic) recovers the monic input.
    std::mt19937 rng(55);
    for (int trial = 0; trial < 8; ++trial)
    {
        RatPoly prod{Rational(1)};
        const int nfactors = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < nfactors; ++k)
        {
            const int root = static_cast<int>(rng() % 7) - 3;
            prod = mulPoly(prod, RatPoly{Rational(-root), Rational(1)});
        }
        auto factors = factorOverQ(prod);
        RatPoly back{Rational(1)};
        for (const RatPoly& f : factors)
            back = mulPoly(back, f);
        CHECK(back == prod);
    }
}

TEST_CASE("square roots inside the cyclotomic field")
{
    // Representable radicands: squarefree part in {1, 2, 3, 6} (and
    // negatives via i).
    const std::vector<Rational> good{
        Rational(2), Rational(3), Rational(6), Rational(1, 2), Rational(4),
        Rational(12), Rational(-1), Rational(-3), Rational(9, 4), Rational(0),
        Rational(-2), Rational(-6), Rational(3, 2), Rational(25, 27)};
    for (const Rational& r : good)
    {
        auto s = sqrtInCyclotomic(r);
        REQUIRE(s.has_value());
        CHECK((*s) * (*s) == CycNum(r));
    }

    // sqrt(12) = 2*sqrt(3); check the exact identity.
    auto s12 = sqrtInCyclotomic(Rational(12));
    REQUIRE(s12.has_value());
    CHECK(*s12 * *s12 == CycNum(Rational(12)));
    const bool plusOrMinus = (*s12 == CycNum(2) * CycNum::sqrt3())
                             || (*s12 == CycNum(-2) * CycNum::sqrt3());
    CHECK(plusOrMinus);

    // sqrt(-1) must square to -1.
    auto si = sqrtInCyclotomic(Rational(-1));
    REQUIRE(si.has_value());
    CHECK((*si) * (*si) == CycNum(-1));

    // Non-representable radicands: squarefree part 5, 7, 10, ...
    const std::vector<Rational> bad{
        Rational(5), Rational(7), Rational(10), Rational(-5), Rational(1, 5),
        Rational(15), Rational(30)};
    for (const Rational& r : bad)
        CHECK_FALSE(sqrtInCyclotomic(r).has_value());
}

TEST_CASE("polynomial printing")
{
    CHECK(polyToString(RatPoly{Rational(-2), Rational(0), Rational(1)}) == "x^2 - 2");
    CHECK(polyToString(RatPoly{}) == "0");
    CHECK(polyToString(RatPoly{Rational(1, 2)}) == "1/2");
}
