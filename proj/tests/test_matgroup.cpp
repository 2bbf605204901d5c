#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "talg/cyclotomic.hpp"
#include "talg/errors.hpp"
#include "talg/matgroup.hpp"

using namespace talg;

namespace {

bool sameMat(const Mat2& a, const Mat2& b)
{
    return matrixKey(a) == matrixKey(b);
}

Mat2 identity2()
{
    return makeMat2(CycNum(1), CycNum(0), CycNum(0), CycNum(1));
}

std::vector<int> classSizes(const ConjugacyClasses& classes)
{
    std::vector<int> sizes;
    for (const auto& c : classes.members)
        sizes.push_back(static_cast<int>(c.size()));
    return sizes;
}

}  // namespace

TEST_CASE("matrix helpers")
{
    const Mat2 m = makeMat2(CycNum(1), CycNum(2), CycNum(3), CycNum(4));
    CHECK(mat2Determinant(m) == CycNum(-2));
    const Mat2 inv = mat2Inverse(m);
    CHECK(sameMat(m * inv, identity2()));
    CHECK(sameMat(inv * m, identity2()));

    const Mat2 singular = makeMat2(CycNum(1), CycNum(2), CycNum(2), CycNum(4));
    CHECK(mat2Determinant(singular).isZero());
    CHECK_THROWS_AS(mat2Inverse(singular), SingularGeneratorError);

    // matrixKey is canonical: equal matrices share a key, different ones do not.
    const Mat2 again = makeMat2(CycNum(1), CycNum(2), CycNum(3), CycNum(4));
    CHECK(matrixKey(m) == matrixKey(again));
    CHECK(matrixKey(m) != matrixKey(inv));

    // Unitary scaled Hadamard: H^2 = I.
    const CycNum h = CycNum(1) / CycNum::sqrt2();
    const Mat2 hadamard = makeMat2(h, h, h, -h);
    CHECK(sameMat(hadamard * hadamard, identity2()));
}

TEST_CASE("group generation basics")
{
    // diag(1, -1) generates a group of order 2.
    const Mat2 refl = makeMat2(CycNum(1), CycNum(0), CycNum(0), CycNum(-1));
    MatGroup z2 = generateGroup({refl});
    CHECK(z2.order() == 2);
    CHECK(sameMat(z2.elements[0], identity2()));

    // The trivial group from the identity alone.
    MatGroup trivial = generateGroup({identity2()});
    CHECK(trivial.order() == 1);

    // i*I generates a cyclic group of order 4.
    const Mat2 iScale = makeMat2(CycNum::i(), CycNum(0), CycNum(0), CycNum::i());
    CHECK(generateGroup({iScale}).order() == 4);

    // An infinite group hits the cap.
    const Mat2 shear = makeMat2(CycNum(1), CycNum(1), CycNum(0), CycNum(1));
    CHECK_THROWS_AS(generateGroup({shear}, 50), CapExceededError);

    // Singular generators are rejected.
    const Mat2 singular = makeMat2(CycNum(1), CycNum(1), CycNum(1), CycNum(1));
    CHECK_THROWS_AS(generateGroup({singular}), SingularGeneratorError);
}

TEST_CASE("multiplication and inverse tables are consistent")
{
    MatGroup g = builtinGroup("I");
    REQUIRE(g.order() == 16);
    for (int x = 0; x < g.order(); ++x)
    {
        CHECK(sameMat(g.elements[g.inverseOf(x)], mat2Inverse(g.elements[x])));
        CHECK(g.multiply(x, g.inverseOf(x)) == 0);
        CHECK(g.multiply(0, x) == x);
        CHECK(g.multiply(x, 0) == x);
        for (int y = 0; y < g.order(); ++y)
        {
            const int product = g.multiply(x, y);
            CHECK(sameMat(g.elements[product], Mat2(g.elements[x] * g.elements[y])));
        }
    }

    // genTable agrees with elementwise products.
    for (int x = 0; x < g.order(); ++x)
    {
        for (std::size_t j = 0; j < g.generators.size(); ++j)
        {
            CHECK(sameMat(g.elements[g.genTable[x][j]],
                          Mat2(g.elements[x] * g.generators[j])));
        }
    }

    // Parent chains reconstruct each element.
    for (int x = 1; x < g.order(); ++x)
    {
        CHECK(sameMat(g.elements[x],
                      Mat2(g.elements[g.parentOf[x]] * g.generators[g.parentGen[x]])));
    }
}

TEST_CASE("builtin groups have the published orders and class counts")
{
    const std::vector<std::string>& names = builtinGroupNames();
    REQUIRE(names == std::vector<std::string>{"I", "II", "III", "IV"});

    const std::map<std::string, int> orders{
        {"I", 16}, {"II", 192}, {"III", 48}, {"IV", 12}};
    const std::map<std::string, int> classCounts{
        {"I", 7}, {"II", 32}, {"III", 14}, {"IV", 6}};
    const std::map<std::string, std::vector<int> > sizeMultisets{
        {"I", {1, 1, 2, 2, 2, 4, 4}},
        {"III", {1, 1, 1, 1, 4, 4, 4, 4, 4, 4, 4, 4, 6, 6}},
        {"IV", {1, 1, 2, 2, 3, 3}}};

    for (const std::string& name : names)
    {
        MatGroup g = builtinGroup(name);
        CHECK(g.order() == orders.at(name));
        ConjugacyClasses classes = conjugacyClasses(g);
        CHECK(static_cast<int>(classes.members.size()) == classCounts.at(name));

        // Class sizes partition the group.
        std::vector<int> sizes = classSizes(classes);
        int total = 0;
        for (int s : sizes)
            total += s;
        CHECK(total == g.order());

        // Identity class comes first and is a singleton.
        CHECK(sizes.front() == 1);
        CHECK(classes.members[0] == std::vector<int>{0});

        // Every class size divides the group order (orbit-stabilizer).
        for (int s : sizes)
            CHECK(g.order() % s == 0);

        auto sorted = sizes;
        std::sort(sorted.begin(), sorted.end());
        if (sizeMultisets.count(name))
            CHECK(sorted == sizeMultisets.at(name));

        // -I lies in every one of these groups, in a singleton class.
        const Mat2 minusId = makeMat2(CycNum(-1), CycNum(0), CycNum(0), CycNum(-1));
        const std::string key = matrixKey(minusId);
        int found = -1;
        for (int x = 0; x < g.order(); ++x)
        {
            if (matrixKey(g.elements[x]) == key)
                found = x;
        }
        REQUIRE(found >= 0);
        CHECK(classes.members[classes.classOf[found]].size() == 1);
    }

    // Group II class sizes: eight 1s, twelve 6s, eight 8s, four 12s.
    ConjugacyClasses c2 = conjugacyClasses(builtinGroup("II"));
    std::vector<int> s2 = classSizes(c2);
    std::sort(s2.begin(), s2.end());
    std::vector<int> expected;
    expected.insert(expected.end(), 8, 1);
    expected.insert(expected.end(), 12, 6);
    expected.insert(expected.end(), 8, 8);
    expected.insert(expected.end(), 4, 12);
    CHECK(s2 == expected);

    CHECK_THROWS_AS(builtinGroup("V"), Error);
    CHECK_THROWS_AS(builtinGenerators("nope"), Error);
}

TEST_CASE("conjugacy classes are closed under conjugation")
{
    for (const std::string& name : {"I", "IV"})
    {
        MatGroup g = builtinGroup(name);
        ConjugacyClasses classes = conjugacyClasses(g);
        for (int x = 0; x < g.order(); ++x)
        {
            for (int t = 0; t < g.order(); ++t)
            {
                const int conj = g.multiply(g.multiply(t, x), g.inverseOf(t));
                CHECK(classes.classOf[conj] == classes.classOf[x]);
            }
        }

        // Representatives live in their own class and have the least key.
        for (std::size_t c = 0; c < classes.members.size(); ++c)
        {
            const int rep = classes.representative[c];
            CHECK(classes.classOf[rep] == static_cast<int>(c));
            for (int member : classes.members[c])
                CHECK(matrixKey(g.elements[rep]) <= matrixKey(g.elements[member]));
        }
    }
}

TEST_CASE("builtin generators match their groups")
{
    for (const std::string& name : builtinGroupNames())
    {
        const std::vector<Mat2> gens = builtinGenerators(name);
        REQUIRE(gens.size() == 2);
        MatGroup g = builtinGroup(name);

        // Generators are unitary up to the group: det is a root of unity.
        for (const Mat2& gen : gens)
        {
            const CycNum det = mat2Determinant(gen);
            CHECK_FALSE(det.isZero());
        }

        // Regenerating from the full element list returns the same group.
        MatGroup again = generateGroup(g.elements, g.order());
        CHECK(again.order() == g.order());
    }

    // Group I generators: Hadamard-like H with H^2 = I, diag(1,-1).
    const std::vector<Mat2> gensI = builtinGenerators("I");
    CHECK(sameMat(gensI[0] * gensI[0], identity2()));
    CHECK(sameMat(gensI[1] * gensI[1], identity2()));

    // Group III's diagonal generator has order 3.
    const std::vector<Mat2> gensIII = builtinGenerators("III");
    const Mat2 d3 = gensIII[1];
    CHECK_FALSE(sameMat(d3, identity2()));
    CHECK(sameMat(d3 * d3 * d3, identity2()));
}

TEST_CASE("class equation of the dihedral group of order 16")
{
    // Group I is generated by two involutions; its 7 classes give the
    // class equation 16 = 1 + 1 + 2 + 2 + 2 + 4 + 4.
    MatGroup g = builtinGroup("I");
    ConjugacyClasses classes = conjugacyClasses(g);
    std::vector<int> sizes = classSizes(classes);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 2, 2, 2, 4, 4});

    // The product of the two generators has order 8 (16-element dihedral).
    const std::vector<Mat2> gens = builtinGenerators("I");
    Mat2 rot = gens[0] * gens[1];
    Mat2 power = rot;
    int order = 1;
    while (!sameMat(power, identity2()))
    {
        power = power * rot;
        order++;
        REQUIRE(order <= 16);
    }
    CHECK(order == 8);
}
