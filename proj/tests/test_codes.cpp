#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "talg/codes.hpp"
#include "talg/errors.hpp"
#include "talg/invariants.hpp"
#include "talg/matgroup.hpp"
#include "talg/reference.hpp"

using namespace talg;

namespace {

BivarPoly poly(const std::vector<std::vector<int> >& terms)
{
    // Each row is {xPow, yPow, coeff}.
    BivarPoly p;
    for (const auto& t : terms)
        p.addTerm(t[0], t[1], CycNum(t[2]));
    return p;
}

/** MacWilliams substitution x -> x + (q-1) y, y -> x - y. */
Mat2 macWilliams(int q)
{
    return makeMat2(CycNum(1), CycNum(q - 1), CycNum(1), CycNum(-1));
}

long power(int base, int exp)
{
    long result = 1;
    for (int k = 0; k < exp; ++k)
        result *= base;
    return result;
}

}  // namespace

TEST_CASE("galois field arithmetic")
{
    for (int q : {2, 3, 4})
    {
        GaloisField field(q);
        CHECK(field.order() == q);
        for (int a = 0; a < q; ++a)
        {
            CHECK(field.add(a, 0) == a);
            CHECK(field.mul(a, 1) == a);
            CHECK(field.mul(a, 0) == 0);
            CHECK(field.add(a, field.neg(a)) == 0);
            CHECK(field.sub(a, a) == 0);
            CHECK(field.conj(field.conj(a)) == a);
            if (a != 0)
                CHECK(field.mul(a, field.inv(a)) == 1);
            for (int b = 0; b < q; ++b)
            {
                CHECK(field.add(a, b) == field.add(b, a));
                CHECK(field.mul(a, b) == field.mul(b, a));
                CHECK(field.conj(field.mul(a, b))
                      == field.mul(field.conj(a), field.conj(b)));
                CHECK(field.sub(a, b) == field.add(a, field.neg(b)));
                for (int c = 0; c < q; ++c)
                {
                    CHECK(field.mul(a, field.add(b, c))
                          == field.add(field.mul(a, b), field.mul(a, c)));
                }
            }
        }
    }

    // GF(4) specifics: 2 = omega, 3 = omega^2; addition is xor and
    // conjugation is squaring.
    GaloisField gf4(4);
    CHECK(gf4.add(2, 3) == 1);
    CHECK(gf4.add(1, 2) == 3);
    CHECK(gf4.mul(2, 2) == 3);
    CHECK(gf4.mul(2, 3) == 1);
    CHECK(gf4.mul(3, 3) == 2);
    CHECK(gf4.inv(2) == 3);
    CHECK(gf4.inv(3) == 2);
    CHECK(gf4.conj(2) == 3);
    CHECK(gf4.conj(3) == 2);
    CHECK(gf4.conj(1) == 1);
    for (int a = 0; a < 4; ++a)
    {
        for (int b = 0; b < 4; ++b)
            CHECK(gf4.add(a, b) == (a ^ b));
    }

    // GF(2) and GF(3) conjugation is the identity.
    GaloisField gf2(2);
    GaloisField gf3(3);
    for (int a = 0; a < 2; ++a)
        CHECK(gf2.conj(a) == a);
    for (int a = 0; a < 3; ++a)
        CHECK(gf3.conj(a) == a);

    CHECK_THROWS_AS(GaloisField(5), Error);
}

TEST_CASE("builtin fixtures have the expected parameters and enumerators")
{
    CHECK(builtinCodeNames()
          == std::vector<std::string>{"repetition", "hamming8", "tetracode", "hexacode"});
    CHECK_THROWS_AS(builtinCode("nope"), Error);

    struct Expected
    {
        const char* name;
        int q;
        int length;
        int rank;
        BivarPoly enumerator;
    };
    const std::vector<Expected> table = {
        {"repetition", 2, 2, 1, poly({{2, 0, 1}, {0, 2, 1}})},
        {"hamming8", 2, 8, 4, poly({{8, 0, 1}, {4, 4, 14}, {0, 8, 1}})},
        {"tetracode", 3, 4, 2, poly({{4, 0, 1}, {1, 3, 8}})},
        {"hexacode", 4, 6, 3, poly({{6, 0, 1}, {2, 4, 45}, {0, 6, 18}})},
    };
    for (const Expected& e : table)
    {
        const LinearCode code = builtinCode(e.name);
        CHECK(code.q == e.q);
        CHECK(codeLength(code) == e.length);
        CHECK(codeRank(code) == e.rank);
        const BivarPoly w = weightEnumerator(code);
        CHECK(w == e.enumerator);

        // The zero word contributes x^n; the total count is q^k.
        CHECK(w.coefficient(e.length, 0) == CycNum(1));
        CycNum total(0);
        for (const auto& term : w.terms)
            total = total + term.second;
        CHECK(total == CycNum(Rational(power(e.q, e.rank))));
    }
}

TEST_CASE("canonical generators and code equality")
{
    // Zero and duplicate rows are dropped.
    const LinearCode messy{2, {{1, 1, 0}, {1, 1, 0}, {0, 0, 0}}};
    CHECK(codeRank(messy) == 1);
    CHECK(canonicalGenerator(messy) == std::vector<std::vector<int> >{{1, 1, 0}});
    CHECK(sameCode(messy, LinearCode{2, {{1, 1, 0}}}));

    // Row operations do not change the code.
    const LinearCode a{2, {{1, 0}, {0, 1}}};
    const LinearCode b{2, {{1, 1}, {0, 1}}};
    CHECK(sameCode(a, b));
    CHECK_FALSE(sameCode(a, LinearCode{2, {{1, 1}}}));

    // Canonical form works over GF(3) with scaling: 2*(1,2) ~ (1,2) after
    // normalization since 2*2 = 1 mod 3.
    const LinearCode scaled3{3, {{2, 1}}};
    CHECK(canonicalGenerator(scaled3) == std::vector<std::vector<int> >{{1, 2}});
}

TEST_CASE("duals and double duals")
{
    struct Fixture
    {
        const char* name;
        Duality duality;
    };
    const Fixture fixtures[] = {
        {"repetition", Duality::Euclidean},
        {"hamming8", Duality::Euclidean},
        {"tetracode", Duality::Euclidean},
        {"hexacode", Duality::Hermitian},
    };
    for (const Fixture& f : fixtures)
    {
        const LinearCode code = builtinCode(f.name);
        const LinearCode dual = dualCode(code, f.duality);
        CHECK(codeRank(dual) == codeLength(code) - codeRank(code));
        // These fixtures are self-dual.
        CHECK(sameCode(dual, code));
        CHECK(sameCode(dualCode(dual, f.duality), code));
    }

    // The hexacode is not Euclidean self-dual.
    const LinearCode hexacode = builtinCode("hexacode");
    CHECK_FALSE(sameCode(dualCode(hexacode, Duality::Euclidean), hexacode));

    // A non-self-dual example: the [3,1] binary repetition code's dual is
    // the [3,2] even-weight code.
    const LinearCode rep3{2, {{1, 1, 1}}};
    const LinearCode dual3 = dualCode(rep3, Duality::Euclidean);
    CHECK(codeRank(dual3) == 2);
    CHECK(sameCode(dual3, LinearCode{2, {{1, 1, 0}, {0, 1, 1}}}));
    CHECK_FALSE(sameCode(dual3, rep3));
    CHECK(sameCode(dualCode(dual3, Duality::Euclidean), rep3));

    // The dual of the zero code is the full space.
    const LinearCode zero{2, {{0, 0}}};
    CHECK(sameCode(dualCode(zero, Duality::Euclidean),
                   LinearCode{2, {{1, 0}, {0, 1}}}));
}

TEST_CASE("type classification")
{
    CHECK(classifyType(builtinCode("repetition"), Duality::Euclidean) == "I");
    CHECK(classifyType(builtinCode("hamming8"), Duality::Euclidean) == "II");
    CHECK(classifyType(builtinCode("tetracode"), Duality::Euclidean) == "III");
    CHECK(classifyType(builtinCode("hexacode"), Duality::Hermitian) == "IV");

    // The hexacode under the Euclidean form is not self-dual: no type.
    CHECK(classifyType(builtinCode("hexacode"), Duality::Euclidean) == "none");

    // Not self-dual: no type.
    CHECK(classifyType(LinearCode{2, {{1, 1, 0, 0}}}, Duality::Euclidean) == "none");

    // Binary self-dual with a weight not divisible by 4 is Type I only.
    const LinearCode pair4{2, {{1, 1, 0, 0}, {0, 0, 1, 1}}};
    CHECK(classifyType(pair4, Duality::Euclidean) == "I");

    // A Euclidean self-dual quaternary code gets no type either.
    const LinearCode quat{4, {{1, 1}}};
    CHECK(sameCode(dualCode(quat, Duality::Euclidean), quat));
    CHECK(classifyType(quat, Duality::Euclidean) == "none");

    // Published fixture classifications agree end to end.
    for (const PublishedCodeData& data : publishedCodeData())
    {
        const Duality duality =
            data.duality == "hermitian" ? Duality::Hermitian : Duality::Euclidean;
        CHECK(classifyType(builtinCode(data.fixture), duality) == data.type);
    }
}

TEST_CASE("macwilliams identity via the substitution action")
{
    struct Case
    {
        LinearCode code;
        Duality duality;
    };
    const std::vector<Case> cases = {
        {builtinCode("repetition"), Duality::Euclidean},
        {builtinCode("tetracode"), Duality::Euclidean},
        {builtinCode("hexacode"), Duality::Hermitian},
        {LinearCode{2, {{1, 1, 1}}}, Duality::Euclidean},
        {LinearCode{3, {{1, 1, 1}}}, Duality::Euclidean},
        {LinearCode{4, {{1, 0, 1}, {0, 1, 1}}}, Duality::Hermitian},
    };
    for (const Case& c : cases)
    {
        const BivarPoly w = weightEnumerator(c.code);
        const BivarPoly wDual = weightEnumerator(dualCode(c.code, c.duality));
        const BivarPoly transformed =
            actOn(w, macWilliams(c.code.q))
                .scaled(CycNum(Rational(1, power(c.code.q, codeRank(c.code)))));
        CHECK(transformed == wDual);
    }
}

TEST_CASE("enumerator invariance under the associated groups")
{
    struct Pairing
    {
        const char* fixture;
        const char* group;
    };
    const Pairing pairings[] = {
        {"repetition", "I"},
        {"hamming8", "II"},
        {"tetracode", "III"},
        {"hexacode", "IV"},
    };
    for (const Pairing& p : pairings)
    {
        const BivarPoly w = weightEnumerator(builtinCode(p.fixture));
        MatGroup group = builtinGroup(p.group);
        for (const Mat2& element : group.elements)
            CHECK(checkEnumeratorInvariance(w, element));
    }

    // x^2 + y^2 is moved by the diag(1, i) generator of group II.
    const BivarPoly w2 = weightEnumerator(builtinCode("repetition"));
    const Mat2 diagI = makeMat2(CycNum(1), CycNum(0), CycNum(0), CycNum::i());
    CHECK_FALSE(checkEnumeratorInvariance(w2, diagI));
}

TEST_CASE("oversized codes are rejected")
{
    LinearCode big;
    big.q = 2;
    big.generator.assign(25, std::vector<int>(25, 0));
    for (int i = 0; i < 25; ++i)
        big.generator[i][i] = 1;
    CHECK(codeRank(big) == 25);
    CHECK_THROWS_AS(weightEnumerator(big), TooLargeError);
}
