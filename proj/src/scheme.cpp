/**
 * Implementation of group association schemes and their intersection
 * numbers, with built-in exact cross-checks.
 */
#include "talg/scheme.hpp"

#include <string>

#include "talg/errors.hpp"

namespace talg {

int Scheme::order() const
{
    return this->group.order();
}

int Scheme::numClasses() const
{
    return static_cast<int>(this->classes.members.size());
}

int Scheme::relation(int x, int y) const
{
    return this->relationTable[x][y];
}

std::vector<long> Scheme::classSizes() const
{
    std::vector<long> sizes(this->classes.members.size());
    for (std::size_t c = 0; c < this->classes.members.size(); ++c)
    {
        sizes[c] = static_cast<long>(this->classes.members[c].size());
    }
    return sizes;
}

Scheme buildScheme(const MatGroup& group)
{
    Scheme scheme;
    scheme.group = group;
    scheme.classes = conjugacyClasses(group);
    const int n = group.order();
    const int s = static_cast<int>(scheme.classes.members.size());

    scheme.relationTable.assign(n, std::vector<int>(n, -1));
    scheme.neighbors.assign(s, std::vector<std::vector<int> >(n));
    for (int x = 0; x < n; ++x)
    {
        const int xInv = group.inverseOf(x);
        for (int y = 0; y < n; ++y)
        {
            const int i = scheme.classes.classOf[group.multiply(y, xInv)];
            scheme.relationTable[x][y] = i;
            scheme.neighbors[i][x].push_back(y);
        }
    }
    return scheme;
}

IntersectionTensor intersectionNumbers(const Scheme& scheme)
{
    const int s = scheme.numClasses();
    const int n = scheme.order();
    IntersectionTensor p(s, std::vector<std::vector<long> >(s, std::vector<long>(s, 0)));

    std::vector<long> rowCounts(n);
    for (int i = 0; i < s; ++i)
    {
        for (int j = 0; j < s; ++j)
        {
            // (A_i A_j)_{e,z} = #{y in C_i : z y^-1 in C_j}; accumulate over
            // y in Gamma_i(e) = C_i and z in Gamma_j(y).
            std::fill(rowCounts.begin(), rowCounts.end(), 0L);
            for (int y : scheme.classes.members[i])
            {
                for (int z : scheme.neighbors[j][y])
                {
                    ++rowCounts[z];
                }
            }
            // The count must be constant on each class C_k; that constant
            // is p_ij^k.
            for (int k = 0; k < s; ++k)
            {
                const long value = rowCounts[scheme.classes.members[k][0]];
                for (int z : scheme.classes.members[k])
                {
                    if (rowCounts[z] != value)
                    {
                        throw ConsistencyError(
                            "intersection count not constant on class "
                            + std::to_string(k) + " for (i,j)=(" + std::to_string(i) + ","
                            + std::to_string(j) + ")");
                    }
                }
                p[i][j][k] = value;
            }
        }
    }

    // Independent route: p_ij^k also counts pairs (x, y) in C_i x C_j with
    // x y equal to a fixed element of C_k.
    std::vector<std::vector<long> > pairCounts(s, std::vector<long>(s, 0));
    for (int k = 0; k < s; ++k)
    {
        const int target = scheme.classes.representative[k];
        for (int i = 0; i < s; ++i)
        {
            for (std::vector<long>& row : pairCounts)
            {
                std::fill(row.begin(), row.end(), 0L);
            }
            for (int x : scheme.classes.members[i])
            {
                for (int j = 0; j < s; ++j)
                {
                    // y = x^-1 * target is the only candidate with x y = target.
                    const int y = scheme.group.multiply(scheme.group.inverseOf(x), target);
                    if (scheme.classes.classOf[y] == j)
                    {
                        ++pairCounts[i][j];
                    }
                }
            }
            for (int j = 0; j < s; ++j)
            {
                if (pairCounts[i][j] != p[i][j][k])
                {
                    throw ConsistencyError("matrix and pair-counting routes disagree at (i,j,k)=("
                                           + std::to_string(i) + "," + std::to_string(j) + ","
                                           + std::to_string(k) + ")");
                }
            }
        }
    }
    return p;
}

void verifyBoseMesner(const Scheme& scheme, const IntersectionTensor& p,
                      const std::vector<int>& rows)
{
    const int s = scheme.numClasses();
    const int n = scheme.order();
    std::vector<long> counts(n);
    for (int x : rows)
    {
        for (int i = 0; i < s; ++i)
        {
            for (int j = 0; j < s; ++j)
            {
                std::fill(counts.begin(), counts.end(), 0L);
                for (int y : scheme.neighbors[i][x])
                {
                    for (int z : scheme.neighbors[j][y])
                    {
                        ++counts[z];
                    }
                }
                for (int z = 0; z < n; ++z)
                {
                    if (counts[z] != p[i][j][scheme.relation(x, z)])
                    {
                        throw ConsistencyError("Bose-Mesner expansion fails at row "
                                               + std::to_string(x) + ", (i,j)=("
                                               + std::to_string(i) + "," + std::to_string(j)
                                               + "), column " + std::to_string(z));
                    }
                }
            }
        }
    }
}

long dimensionLowerBound(const IntersectionTensor& p)
{
    long count = 0;
    for (const std::vector<std::vector<long> >& plane : p)
    {
        for (const std::vector<long>& row : plane)
        {
            for (long v : row)
            {
                if (v != 0)
                {
                    ++count;
                }
            }
        }
    }
    return count;
}

long dimensionUpperBound(const Scheme& scheme)
{
    const long n = scheme.order();
    long total = 0;
    for (const std::vector<int>& members : scheme.classes.members)
    {
        total += n / static_cast<long>(members.size());
    }
    return total;
}

}  // namespace talg
