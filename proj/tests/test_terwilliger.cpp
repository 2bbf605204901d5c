#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "talg/errors.hpp"
#include "talg/matgroup.hpp"
#include "talg/reference.hpp"
#include "talg/scheme.hpp"
#include "talg/terwilliger.hpp"

using namespace talg;

namespace {

TAlgebra buildAlgebra(const std::string& name)
{
    Scheme scheme = buildScheme(builtinGroup(name));
    IntersectionTensor p = intersectionNumbers(scheme);
    return basisClosure(scheme, p);
}

/** Adjacency block E_i* A_j E_k* as a dense matrix (classes ascending). */
RatMatrix adjacencyBlock(const Scheme& scheme, int i, int j, int k)
{
    const std::vector<int>& rows = scheme.classes.members[i];
    const std::vector<int>& cols = scheme.classes.members[k];
    RatMatrix block = RatMatrix::Constant(rows.size(), cols.size(), Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        for (std::size_t c = 0; c < cols.size(); ++c)
        {
            if (scheme.relation(rows[r], cols[c]) == j)
                block(r, c) = 1;
        }
    }
    return block;
}

/** E-coordinates (over the diagonal-block basis) of a center-basis combo. */
RatVector eCoordsOf(const CenterBasis& center, const RatVector& zCoords)
{
    return center.coefficients.transpose() * zCoords;
}

/**
 * Builds a hand-made commutative block algebra on the group IV scheme:
 * the six diagonal-block identities plus the given extra diagonal blocks
 * (given in echelon-pivot order within each block).
 */
TAlgebra makeSynthetic(const std::vector<std::pair<int, RatMatrix> >& extras)
{
    TAlgebra alg;
    alg.scheme = buildScheme(builtinGroup("IV"));
    alg.p = intersectionNumbers(alg.scheme);
    const std::vector<long> sizes = alg.scheme.classSizes();
    int next = 0;
    for (int i = 0; i < alg.scheme.numClasses(); ++i)
    {
        TBasisElement e;
        e.left = i;
        e.right = i;
        e.mat = RatMatrix::Identity(sizes[i], sizes[i]);
        alg.basis.push_back(e);
        alg.blockIndex[std::make_pair(i, i)].push_back(next++);
        for (const auto& extra : extras)
        {
            if (extra.first != i)
                continue;
            TBasisElement x;
            x.left = i;
            x.right = i;
            x.mat = extra.second;
            alg.basis.push_back(x);
            alg.blockIndex[std::make_pair(i, i)].push_back(next++);
        }
    }
    alg.dimHistory = {static_cast<long>(alg.basis.size())};
    alg.stabilizationDepth = 1;
    return alg;
}

void checkIdempotentSystem(const TAlgebra& alg, const CenterBasis& center,
                           const std::vector<CentralIdempotent>& idems)
{
    const int numClasses = alg.scheme.numClasses();
    const std::vector<long> sizes = alg.scheme.classSizes();
    for (int i = 0; i < numClasses; ++i)
    {
        std::vector<CycMatrix> blocks;
        for (const CentralIdempotent& idem : idems)
            blocks.push_back(centerBlockCyc(alg, center, idem.eCoords, i));

        // They are idempotent, pairwise orthogonal, and sum to the identity.
        CycMatrix sum = CycMatrix::Constant(sizes[i], sizes[i], CycNum(0));
        for (std::size_t a = 0; a < blocks.size(); ++a)
        {
            sum += blocks[a];
            CHECK(CycMatrix(blocks[a] * blocks[a]) == blocks[a]);
            for (std::size_t b = a + 1; b < blocks.size(); ++b)
            {
                const CycMatrix zero =
                    CycMatrix::Constant(sizes[i], sizes[i], CycNum(0));
                CHECK(CycMatrix(blocks[a] * blocks[b]) == zero);
                CHECK(CycMatrix(blocks[b] * blocks[a]) == zero);
            }
        }
        CycMatrix identity = CycMatrix::Constant(sizes[i], sizes[i], CycNum(0));
        for (long r = 0; r < sizes[i]; ++r)
            identity(r, r) = CycNum(1);
        CHECK(sum == identity);
    }
}

}  // namespace

TEST_CASE("dual idempotents cut out the conjugacy classes")
{
    Scheme scheme = buildScheme(builtinGroup("IV"));
    auto duals = buildDualIdempotents(scheme);
    REQUIRE(static_cast<int>(duals.size()) == scheme.numClasses());
    for (int x = 0; x < scheme.order(); ++x)
    {
        int hits = 0;
        for (int i = 0; i < scheme.numClasses(); ++i)
        {
            CHECK((duals[i][x] == 0 || duals[i][x] == 1));
            if (duals[i][x] == 1)
            {
                hits++;
                CHECK(scheme.classes.classOf[x] == i);
            }
        }
        CHECK(hits == 1);
    }
}

TEST_CASE("adjacency blocks vanish exactly where the intersection numbers do")
{
    Scheme scheme = buildScheme(builtinGroup("I"));
    IntersectionTensor p = intersectionNumbers(scheme);
    const int d = scheme.numClasses();
    for (int i = 0; i < d; ++i)
    {
        for (int j = 0; j < d; ++j)
        {
            for (int k = 0; k < d; ++k)
            {
                const RatMatrix block = adjacencyBlock(scheme, i, j, k);
                const bool zero =
                    block == RatMatrix::Constant(block.rows(), block.cols(), Rational(0));
                CHECK(zero == (p[i][j][k] == 0));
            }
        }
    }
}

TEST_CASE("triple products already span the group I algebra")
{
    TAlgebra alg = buildAlgebra("I");
    const Scheme& scheme = alg.scheme;
    const int d = scheme.numClasses();
    const int n = scheme.order();
    SpanTracker<Rational> tracker(n * n);
    for (int i = 0; i < d; ++i)
    {
        for (int j = 0; j < d; ++j)
        {
            for (int k = 0; k < d; ++k)
            {
                const RatMatrix block = adjacencyBlock(scheme, i, j, k);
                SparseRow<Rational> flat;
                const std::vector<int>& rows = scheme.classes.members[i];
                const std::vector<int>& cols = scheme.classes.members[k];
                for (std::size_t r = 0; r < rows.size(); ++r)
                {
                    for (std::size_t c = 0; c < cols.size(); ++c)
                    {
                        if (block(r, c) != 0)
                            flat.emplace_back(rows[r] * n + cols[c], block(r, c));
                    }
                }
                tracker.add(std::move(flat));
            }
        }
    }
    CHECK(tracker.rank() == 64);
    CHECK(alg.dimT() == 64);
    CHECK(alg.stabilizationDepth == 1);
}

TEST_CASE("closure dimensions, bounds and block tables")
{
    struct Expected
    {
        const char* name;
        long dim;
    };
    const Expected table[] = {{"I", 64}, {"III", 300}, {"IV", 44}};
    for (const Expected& e : table)
    {
        TAlgebra alg = buildAlgebra(e.name);
        CHECK(alg.dimT() == e.dim);
        CHECK(alg.stabilizationDepth == 1);
        REQUIRE_FALSE(alg.dimHistory.empty());
        CHECK(alg.dimHistory.back() == e.dim);
        for (std::size_t h = 1; h < alg.dimHistory.size(); ++h)
            CHECK(alg.dimHistory[h - 1] <= alg.dimHistory[h]);

        CHECK(dimensionLowerBound(alg.p) <= alg.dimT());
        CHECK(alg.dimT() <= dimensionUpperBound(alg.scheme));

        const IntMatrix counts = alg.blockCounts();
        const int d = alg.scheme.numClasses();
        REQUIRE(counts.rows() == d);
        REQUIRE(counts.cols() == d);
        long total = 0;
        for (int r = 0; r < d; ++r)
        {
            CHECK(counts(0, r) == 1);
            CHECK(counts(r, 0) == 1);
            for (int c = 0; c < d; ++c)
            {
                total += counts(r, c);
                CHECK(counts(r, c) == counts(c, r));
                CHECK(static_cast<int>(alg.blockBasis(r, c).size()) == counts(r, c));
            }
        }
        CHECK(total == e.dim);

        // The block table matches the published one up to class relabeling.
        auto perm = findBlockPermutation(counts, publishedGroupData(e.name).blockCounts);
        CHECK(perm.has_value());
    }

    // Groups I and IV meet their upper bounds exactly.
    for (const char* name : {"I", "IV"})
    {
        TAlgebra alg = buildAlgebra(name);
        CHECK(alg.dimT() == dimensionUpperBound(alg.scheme));
    }
}

TEST_CASE("basis elements embed consistently into the full matrix space")
{
    TAlgebra alg = buildAlgebra("IV");
    const int n = alg.scheme.order();
    SpanTracker<Rational> tracker(n * n);
    for (std::size_t b = 0; b < alg.basis.size(); ++b)
    {
        const RatMatrix full = fullMatrix(alg, static_cast<int>(b));
        REQUIRE(full.rows() == n);
        REQUIRE(full.cols() == n);
        for (int x = 0; x < n; ++x)
        {
            for (int y = 0; y < n; ++y)
            {
                if (full(x, y) != 0)
                {
                    CHECK(alg.scheme.classes.classOf[x] == alg.basis[b].left);
                    CHECK(alg.scheme.classes.classOf[y] == alg.basis[b].right);
                }
            }
        }
        RatVector flat(n * n);
        for (int x = 0; x < n; ++x)
        {
            for (int y = 0; y < n; ++y)
                flat(x * n + y) = full(x, y);
        }
        CHECK(tracker.add(flat));
    }
    CHECK(tracker.rank() == alg.dimT());

    // Closure rejects a nonsensical depth limit.
    CHECK_THROWS_AS(basisClosure(alg.scheme, alg.p, 0), Error);
}

TEST_CASE("center elements commute with the whole algebra")
{
    TAlgebra alg = buildAlgebra("IV");
    CenterBasis center = centerBasis(alg);
    CHECK(center.dim() == 3);

    for (long a = 0; a < center.dim(); ++a)
    {
        RatVector zCoords = RatVector::Constant(center.dim(), Rational(0));
        zCoords(a) = 1;
        const RatVector eCoords = eCoordsOf(center, zCoords);
        std::vector<RatMatrix> zBlocks;
        for (int i = 0; i < alg.scheme.numClasses(); ++i)
            zBlocks.push_back(centerBlock(alg, center, eCoords, i));
        for (const TBasisElement& b : alg.basis)
        {
            CHECK(RatMatrix(zBlocks[b.left] * b.mat)
                  == RatMatrix(b.mat * zBlocks[b.right]));
        }
    }

    // The identity of the algebra lies in the center.
    CenterStructure structure = centerStructure(alg, center);
    REQUIRE(structure.identityCoords.rows() == center.dim());
    const RatVector idECoords = eCoordsOf(center, structure.identityCoords);
    for (int i = 0; i < alg.scheme.numClasses(); ++i)
    {
        const long size = alg.scheme.classSizes()[i];
        CHECK(centerBlock(alg, center, idECoords, i)
              == RatMatrix(RatMatrix::Identity(size, size)));
    }

    // Structure constants r_ab^c = leftMult[a](b, c) represent a
    // commutative multiplication with unit.
    for (long a = 0; a < center.dim(); ++a)
    {
        REQUIRE(structure.leftMult[a].rows() == center.dim());
        REQUIRE(structure.leftMult[a].cols() == center.dim());
        for (long b = 0; b < center.dim(); ++b)
        {
            for (long c = 0; c < center.dim(); ++c)
                CHECK(structure.leftMult[a](b, c) == structure.leftMult[b](a, c));
        }
        // z_a * identity = z_a.
        RatVector ea = RatVector::Constant(center.dim(), Rational(0));
        ea(a) = 1;
        CHECK(RatVector(structure.leftMult[a].transpose() * structure.identityCoords)
              == ea);
    }
}

TEST_CASE("central idempotents and degrees of groups I, III and IV")
{
    struct Expected
    {
        const char* name;
        long centerDim;
        std::vector<long> degrees;
    };
    const Expected table[] = {
        {"I", 5, {1, 1, 2, 3, 7}},
        {"III", 3, {2, 10, 14}},
        {"IV", 3, {2, 2, 6}},
    };
    for (const Expected& e : table)
    {
        TAlgebra alg = buildAlgebra(e.name);
        CenterBasis center = centerBasis(alg);
        CHECK(center.dim() == e.centerDim);

        std::vector<CentralIdempotent> idems = centralIdempotents(alg, center);
        CHECK(static_cast<long>(idems.size()) == e.centerDim);
        for (const CentralIdempotent& idem : idems)
        {
            CHECK(idem.path == SplitPath::RationalFactor);
            CHECK(idem.rational);
            // The rational coordinate copy agrees with the cyclotomic one.
            REQUIRE(idem.eCoordsRational.rows() == idem.eCoords.rows());
            for (long r = 0; r < idem.eCoords.rows(); ++r)
                CHECK(idem.eCoords(r) == CycNum(idem.eCoordsRational(r)));
        }
        checkIdempotentSystem(alg, center, idems);

        std::vector<long> degrees = wedderburnDegrees(alg, center, idems);
        REQUIRE(degrees.size() == idems.size());
        std::sort(degrees.begin(), degrees.end());
        CHECK(degrees == e.degrees);
        long sumSq = 0;
        for (long d : degrees)
            sumSq += d * d;
        CHECK(sumSq == alg.dimT());
    }
}

TEST_CASE("group II reaches dimension 2080 with the published block table")
{
    TAlgebra alg = buildAlgebra("II");
    CHECK(alg.dimT() == 2080);
    CHECK(alg.stabilizationDepth == 1);
    CHECK(dimensionUpperBound(alg.scheme) == 2176);

    const IntMatrix counts = alg.blockCounts();
    long total = 0;
    for (int r = 0; r < counts.rows(); ++r)
    {
        for (int c = 0; c < counts.cols(); ++c)
            total += counts(r, c);
    }
    CHECK(total == 2080);

    // The published 32 x 32 table is a relabeling of the computed one; its
    // entries therefore also sum to 2080.
    const IntMatrix& published = publishedGroupData("II").blockCounts;
    long publishedTotal = 0;
    for (int r = 0; r < published.rows(); ++r)
    {
        for (int c = 0; c < published.cols(); ++c)
            publishedTotal += published(r, c);
    }
    CHECK(publishedTotal == 2080);
    CHECK(findBlockPermutation(counts, published).has_value());

    CenterBasis center = centerBasis(alg);
    CHECK(center.dim() == 6);
    std::vector<CentralIdempotent> idems = centralIdempotents(alg, center);
    CHECK(idems.size() == 6);
    for (const CentralIdempotent& idem : idems)
    {
        CHECK(idem.path == SplitPath::RationalFactor);
        CHECK(idem.rational);
    }
    std::vector<long> degrees = wedderburnDegrees(alg, center, idems);
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<long>{4, 8, 12, 16, 24, 32});
    long sumSq = 0;
    for (long d : degrees)
        sumSq += d * d;
    CHECK(sumSq == 2080);
}

TEST_CASE("synthetic algebra splitting through a quadratic extension")
{
    // Adjoin v with v^2 = 2 on a 2x2 diagonal block: the component is
    // Q(sqrt 2), whose idempotents live in the cyclotomic field.
    RatMatrix v(2, 2);
    v << Rational(0), Rational(2), Rational(1), Rational(0);
    TAlgebra alg = makeSynthetic({{2, v}});
    REQUIRE(alg.basis.size() == 7);

    CenterBasis center = centerBasis(alg);
    CHECK(center.dim() == 7);

    std::vector<CentralIdempotent> idems = centralIdempotents(alg, center);
    CHECK(idems.size() == 7);
    int irrational = 0;
    int quadratic = 0;
    for (const CentralIdempotent& idem : idems)
    {
        if (!idem.rational)
            irrational++;
        if (idem.path == SplitPath::QuadraticCyclotomic)
            quadratic++;
    }
    CHECK(irrational == 2);
    CHECK(quadratic >= 2);
    checkIdempotentSystem(alg, center, idems);

    std::vector<long> degrees = wedderburnDegrees(alg, center, idems);
    long sumSq = 0;
    for (long d : degrees)
        sumSq += d * d;
    CHECK(sumSq == 7);
    CHECK(*std::max_element(degrees.begin(), degrees.end()) == 1);
}

TEST_CASE("synthetic algebra with an unsplittable cubic component")
{
    // Adjoin w with w^3 = 2 on a 3x3 block: x^3 - 2 has no roots in the
    // cyclotomic field, so the splitting must fail.
    RatMatrix w(3, 3);
    w << Rational(0), Rational(0), Rational(2),
         Rational(1), Rational(0), Rational(0),
         Rational(0), Rational(1), Rational(0);
    RatMatrix w2 = w * w;
    TAlgebra alg = makeSynthetic({{4, w2}, {4, w}});
    REQUIRE(alg.basis.size() == 8);

    CenterBasis center = centerBasis(alg);
    CHECK(center.dim() == 8);
    CHECK_THROWS_AS(centralIdempotents(alg, center), SplittingError);
}

TEST_CASE("synthetic algebra with a quadratic component outside the field")
{
    // v^2 = 5: sqrt 5 does not lie in Q(zeta_24), so neither the quadratic
    // nor the numeric path can realize the splitting.
    RatMatrix v(2, 2);
    v << Rational(0), Rational(5), Rational(1), Rational(0);
    TAlgebra alg = makeSynthetic({{2, v}});

    CenterBasis center = centerBasis(alg);
    CHECK(center.dim() == 7);
    CHECK_THROWS_AS(centralIdempotents(alg, center), SplittingError);
}
