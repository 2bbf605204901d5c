/**
 * Published reference tables for the built-in groups, invariants and codes.
 */
#include "talg/reference.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "talg/errors.hpp"

namespace talg {

namespace {

BivarPoly makePoly(const std::vector<std::tuple<int, int, Rational> >& termList)
{
    BivarPoly p;
    for (const std::tuple<int, int, Rational>& t : termList)
    {
        p.addTerm(std::get<0>(t), std::get<1>(t), CycNum(std::get<2>(t)));
    }
    return p;
}

IntMatrix matrixFromRows(const std::vector<std::vector<std::int64_t> >& rows)
{
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        for (std::size_t c = 0; c < rows[r].size(); ++c)
        {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

IntMatrix publishedBlocksI()
{
    return matrixFromRows({{1, 1, 1, 1, 1, 1, 1},
                           {1, 3, 1, 1, 2, 1, 1},
                           {1, 1, 2, 1, 1, 2, 2},
                           {1, 1, 1, 1, 1, 1, 1},
                           {1, 2, 1, 1, 3, 1, 1},
                           {1, 1, 2, 1, 1, 2, 2},
                           {1, 1, 2, 1, 1, 2, 2}});
}

IntMatrix publishedBlocksII()
{
    // The 32 x 32 table has four row types; rows repeat one of three
    // patterns (or are constant 1), at the printed row indices.
    const std::vector<int> onesRows{0, 11, 17, 18, 20, 26, 28, 31};
    const std::vector<int> bRows{1, 2, 3, 4, 7, 10, 12, 13, 21, 22, 27, 29};
    const std::vector<int> cRows{5, 6, 8, 9};
    const std::vector<int> dRows{14, 15, 16, 19, 23, 24, 25, 30};
    const std::vector<std::int64_t> bPattern{1, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 1, 3, 3, 2, 2,
                                             2, 1, 1, 2, 1, 3, 3, 2, 2, 2, 1, 3, 1, 3, 2, 1};
    const std::vector<std::int64_t> cPattern{1, 3, 3, 3, 3, 5, 5, 3, 5, 5, 3, 1, 3, 3, 3, 3,
                                             3, 1, 1, 3, 1, 3, 3, 3, 3, 3, 1, 3, 1, 3, 3, 1};
    const std::vector<std::int64_t> dPattern{1, 2, 2, 2, 2, 3, 3, 2, 3, 3, 2, 1, 2, 2, 4, 4,
                                             4, 1, 1, 4, 1, 2, 2, 4, 4, 4, 1, 2, 1, 2, 4, 1};
    IntMatrix m = IntMatrix::Constant(32, 32, 1);
    for (int r : bRows)
    {
        for (int c = 0; c < 32; ++c)
        {
            m(r, c) = bPattern[c];
        }
    }
    for (int r : cRows)
    {
        for (int c = 0; c < 32; ++c)
        {
            m(r, c) = cPattern[c];
        }
    }
    for (int r : dRows)
    {
        for (int c = 0; c < 32; ++c)
        {
            m(r, c) = dPattern[c];
        }
    }
    for (int r : onesRows)
    {
        for (int c = 0; c < 32; ++c)
        {
            m(r, c) = 1;
        }
    }
    return m;
}

IntMatrix publishedBlocksIII()
{
    const std::vector<int> onesRows{0, 3, 7, 10};
    const std::vector<int> specialRows{6, 13};
    const std::vector<std::int64_t> generic{1, 2, 2, 1, 2, 2, 2, 1, 2, 2, 1, 2, 2, 2};
    const std::vector<std::int64_t> special{1, 2, 2, 1, 2, 2, 3, 1, 2, 2, 1, 2, 2, 3};
    IntMatrix m(14, 14);
    for (int r = 0; r < 14; ++r)
    {
        const std::vector<std::int64_t>* pattern = &generic;
        if (std::find(onesRows.begin(), onesRows.end(), r) != onesRows.end())
        {
            pattern = nullptr;
        }
        else if (std::find(specialRows.begin(), specialRows.end(), r) != specialRows.end())
        {
            pattern = &special;
        }
        for (int c = 0; c < 14; ++c)
        {
            m(r, c) = pattern == nullptr ? 1 : (*pattern)[c];
        }
    }
    return m;
}

IntMatrix publishedBlocksIV()
{
    return matrixFromRows({{1, 1, 1, 1, 1, 1},
                           {1, 2, 2, 1, 1, 1},
                           {1, 2, 2, 1, 1, 1},
                           {1, 1, 1, 2, 2, 1},
                           {1, 1, 1, 2, 2, 1},
                           {1, 1, 1, 1, 1, 1}});
}

std::map<std::string, PublishedGroupData> buildGroupData()
{
    std::map<std::string, PublishedGroupData> data;
    {
        PublishedGroupData d;
        d.name = "I";
        d.order = 16;
        d.numClasses = 7;
        d.classSizes = {1, 1, 2, 2, 2, 4, 4};
        d.blockCounts = publishedBlocksI();
        d.dimT = 64;
        d.centerDim = 5;
        d.degrees = {1, 1, 2, 3, 7};
        d.molienDegrees = {2, 8};
        data.emplace("I", std::move(d));
    }
    {
        PublishedGroupData d;
        d.name = "II";
        d.order = 192;
        d.numClasses = 32;
        d.classSizes.assign(8, 1);
        d.classSizes.insert(d.classSizes.end(), 12, 6);
        d.classSizes.insert(d.classSizes.end(), 8, 8);
        d.classSizes.insert(d.classSizes.end(), 4, 12);
        d.blockCounts = publishedBlocksII();
        d.dimT = 2808;
        d.centerDim = 6;
        d.degrees = {4, 8, 12, 16, 24, 32};
        d.molienDegrees = {8, 24};
        data.emplace("II", std::move(d));
    }
    {
        PublishedGroupData d;
        d.name = "III";
        d.order = 48;
        d.numClasses = 14;
        d.classSizes = {1, 1, 1, 1, 4, 4, 4, 4, 4, 4, 4, 4, 6, 6};
        d.blockCounts = publishedBlocksIII();
        d.dimT = 300;
        d.centerDim = 3;
        d.degrees = {2, 10, 16};
        d.molienDegrees = {4, 12};
        data.emplace("III", std::move(d));
    }
    {
        PublishedGroupData d;
        d.name = "IV";
        d.order = 12;
        d.numClasses = 6;
        d.classSizes = {1, 1, 2, 2, 3, 3};
        d.blockCounts = publishedBlocksIV();
        d.dimT = 44;
        d.centerDim = 3;
        d.degrees = {2, 2, 6};
        d.molienDegrees = {2, 6};
        data.emplace("IV", std::move(d));
    }
    return data;
}

}  // namespace

const PublishedGroupData& publishedGroupData(const std::string& name)
{
    static const std::map<std::string, PublishedGroupData> data = buildGroupData();
    const auto it = data.find(name);
    if (it == data.end())
    {
        throw ParseError("no published data for group '" + name + "'");
    }
    return it->second;
}

const std::vector<PublishedEPoly>& publishedEPolynomials(const std::string& name)
{
    static const std::map<std::string, std::vector<PublishedEPoly> > data = []()
    {
        std::map<std::string, std::vector<PublishedEPoly> > m;
        m["I"] = {
            PublishedEPoly{"phi2", 2, makePoly({{2, 0, Rational(1, 2)}, {0, 2, Rational(1, 2)}})},
            PublishedEPoly{"phi8", 8,
                           makePoly({{8, 0, Rational(9, 32)},
                                     {6, 2, Rational(28, 32)},
                                     {4, 4, Rational(70, 32)},
                                     {2, 6, Rational(28, 32)},
                                     {0, 8, Rational(9, 32)}})}};
        m["II"] = {
            PublishedEPoly{"phi8", 8,
                           makePoly({{8, 0, Rational(5, 24)},
                                     {4, 4, Rational(70, 24)},
                                     {0, 8, Rational(5, 24)}})},
            PublishedEPoly{"phi24", 24,
                           makePoly({{24, 0, Rational(1, 6144)},
                                     {20, 4, Rational(10626, 6144)},
                                     {16, 8, Rational(735471, 6144)},
                                     {12, 12, Rational(2704156, 6144)},
                                     {8, 16, Rational(735471, 6144)},
                                     {4, 20, Rational(10626, 6144)},
                                     {0, 24, Rational(1025, 6144)}})}};
        m["III"] = {
            PublishedEPoly{"phi4", 4,
                           makePoly({{4, 0, Rational(1, 3)}, {1, 3, Rational(8, 3)}})},
            PublishedEPoly{"phi12", 12,
                           makePoly({{12, 0, Rational(61) * 243},
                                     {9, 3, Rational(440) * 243},
                                     {6, 6, Rational(14784) * 243},
                                     {3, 9, Rational(28160) * 243},
                                     {0, 12, Rational(1024) * 243}})}};
        m["IV"] = {
            PublishedEPoly{"phi8", 2,
                           makePoly({{2, 0, Rational(1, 2)}, {0, 2, Rational(3, 2)}})},
            PublishedEPoly{"phi24", 6,
                           makePoly({{6, 0, Rational(11, 32)},
                                     {4, 2, Rational(45, 32)},
                                     {2, 4, Rational(405, 32)},
                                     {0, 6, Rational(243, 32)}})}};
        return m;
    }();
    const auto it = data.find(name);
    if (it == data.end())
    {
        throw ParseError("no published E-polynomials for group '" + name + "'");
    }
    return it->second;
}

const PublishedInvariantPair& publishedInvariants(const std::string& name)
{
    static const std::map<std::string, PublishedInvariantPair> data = []()
    {
        std::map<std::string, PublishedInvariantPair> m;
        const BivarPoly x2 = BivarPoly::monomial(2, 0, CycNum(1));
        const BivarPoly y2 = BivarPoly::monomial(0, 2, CycNum(1));
        {
            // f = x^2 + y^2, g = x^2 y^2 (x^2 - y^2)^2.
            PublishedInvariantPair p;
            p.f = x2 + y2;
            const BivarPoly diff = x2 - y2;
            p.g = BivarPoly::monomial(2, 2, CycNum(1)) * diff * diff;
            m.emplace("I", std::move(p));
        }
        {
            // f = x^8 + 14 x^4 y^4 + y^8, g = x^4 y^4 (x^4 - y^4)^4.
            PublishedInvariantPair p;
            p.f = makePoly({{8, 0, Rational(1)}, {4, 4, Rational(14)}, {0, 8, Rational(1)}});
            const BivarPoly diff =
                BivarPoly::monomial(4, 0, CycNum(1)) - BivarPoly::monomial(0, 4, CycNum(1));
            p.g = BivarPoly::monomial(4, 4, CycNum(1)) * diff * diff * diff * diff;
            m.emplace("II", std::move(p));
        }
        {
            // f = x^4 + 8 x y^3, g = y^3 (x^3 - y^3)^3.
            PublishedInvariantPair p;
            p.f = makePoly({{4, 0, Rational(1)}, {1, 3, Rational(8)}});
            const BivarPoly diff =
                BivarPoly::monomial(3, 0, CycNum(1)) - BivarPoly::monomial(0, 3, CycNum(1));
            p.g = BivarPoly::monomial(0, 3, CycNum(1)) * diff * diff * diff;
            m.emplace("III", std::move(p));
        }
        {
            // f = x^2 + 3 y^2, g = y^2 (x^2 - y^2)^2.
            PublishedInvariantPair p;
            p.f = makePoly({{2, 0, Rational(1)}, {0, 2, Rational(3)}});
            const BivarPoly diff = x2 - y2;
            p.g = BivarPoly::monomial(0, 2, CycNum(1)) * diff * diff;
            m.emplace("IV", std::move(p));
        }
        return m;
    }();
    const auto it = data.find(name);
    if (it == data.end())
    {
        throw ParseError("no published invariants for group '" + name + "'");
    }
    return it->second;
}

const std::vector<PublishedIdentity>& publishedIdentities(const std::string& name)
{
    static const std::map<std::string, std::vector<PublishedIdentity> > data = []()
    {
        std::map<std::string, std::vector<PublishedIdentity> > m;
        m["I"] = {};
        m["II"] = {};
        m["IV"] = {};
        {
            std::vector<PublishedIdentity> ids;
            {
                PublishedIdentity id;
                id.name = "f = 3*phi4";
                id.target = 'f';
                id.expression = {GeneratorTerm{1, 0, CycNum(3)}};
                ids.push_back(std::move(id));
            }
            {
                PublishedIdentity id;
                id.name = "g = (1647*phi4^3 - 243*phi12)/1024";
                id.target = 'g';
                id.expression = {GeneratorTerm{3, 0, CycNum(Rational(1647, 1024))},
                                 GeneratorTerm{0, 1, CycNum(Rational(-243, 1024))}};
                ids.push_back(std::move(id));
            }
            m.emplace("III", std::move(ids));
        }
        return m;
    }();
    const auto it = data.find(name);
    if (it == data.end())
    {
        throw ParseError("no published identities for group '" + name + "'");
    }
    return it->second;
}

const std::vector<PublishedCodeData>& publishedCodeData()
{
    static const std::vector<PublishedCodeData> data = {
        PublishedCodeData{"repetition", "I", "I", "euclidean"},
        PublishedCodeData{"hamming8", "II", "II", "euclidean"},
        PublishedCodeData{"tetracode", "III", "III", "euclidean"},
        PublishedCodeData{"hexacode", "IV", "IV", "hermitian"}};
    return data;
}

std::optional<std::vector<int> > findBlockPermutation(const IntMatrix& computed,
                                                      const IntMatrix& published)
{
    const int n = static_cast<int>(published.rows());
    if (computed.rows() != n || computed.cols() != n || published.cols() != n)
    {
        return std::nullopt;
    }

    // Signature of an index: diagonal entry plus sorted row and column
    // multisets; permutation-equivalence preserves it.
    const auto signature = [n](const IntMatrix& m, int idx)
    {
        std::vector<std::int64_t> sig;
        sig.reserve(2 * n + 1);
        sig.push_back(m(idx, idx));
        std::vector<std::int64_t> row(n);
        std::vector<std::int64_t> col(n);
        for (int j = 0; j < n; ++j)
        {
            row[j] = m(idx, j);
            col[j] = m(j, idx);
        }
        std::sort(row.begin(), row.end());
        std::sort(col.begin(), col.end());
        sig.insert(sig.end(), row.begin(), row.end());
        sig.insert(sig.end(), col.begin(), col.end());
        return sig;
    };

    std::vector<std::vector<int> > candidates(n);
    for (int r = 0; r < n; ++r)
    {
        const std::vector<std::int64_t> sig = signature(published, r);
        for (int x = 0; x < n; ++x)
        {
            if (signature(computed, x) == sig)
            {
                candidates[r].push_back(x);
            }
        }
        if (candidates[r].empty())
        {
            return std::nullopt;
        }
    }

    // Assign most-constrained indices first.
    std::vector<int> order(n);
    for (int r = 0; r < n; ++r)
    {
        order[r] = r;
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b)
              {
                  if (candidates[a].size() != candidates[b].size())
                  {
                      return candidates[a].size() < candidates[b].size();
                  }
                  return a < b;
              });

    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> backtrack = [&](int pos) -> bool
    {
        if (pos == n)
        {
            return true;
        }
        const int r = order[pos];
        for (int x : candidates[r])
        {
            if (used[x])
            {
                continue;
            }
            bool consistent = true;
            for (int earlier = 0; earlier < pos && consistent; ++earlier)
            {
                const int r2 = order[earlier];
                if (published(r, r2) != computed(x, perm[r2])
                    || published(r2, r) != computed(perm[r2], x))
                {
                    consistent = false;
                }
            }
            if (!consistent)
            {
                continue;
            }
            perm[r] = x;
            used[x] = true;
            if (backtrack(pos + 1))
            {
                return true;
            }
            perm[r] = -1;
            used[x] = false;
        }
        return false;
    };
    if (!backtrack(0))
    {
        return std::nullopt;
    }
    return perm;
}

}  // namespace talg
