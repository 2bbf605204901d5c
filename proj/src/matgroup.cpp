/**
 * Implementation of exact 2x2 matrix group generation and conjugacy
 * class computation.
 */
#include "talg/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "talg/errors.hpp"

namespace talg {

Mat2 makeMat2(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d)
{
    Mat2 m;
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

std::string matrixKey(const Mat2& m)
{
    return "[" + m(0, 0).toString() + ", " + m(0, 1).toString() + "; " + m(1, 0).toString()
           + ", " + m(1, 1).toString() + "]";
}

CycNum mat2Determinant(const Mat2& m)
{
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

Mat2 mat2Inverse(const Mat2& m)
{
    const CycNum det = mat2Determinant(m);
    if (det.isZero())
    {
        throw SingularGeneratorError("matrix " + matrixKey(m) + " is singular");
    }
    const CycNum inv = det.inverse();
    return makeMat2(m(1, 1) * inv, -m(0, 1) * inv, -m(1, 0) * inv, m(0, 0) * inv);
}

int MatGroup::order() const
{
    return static_cast<int>(this->elements.size());
}

int MatGroup::multiply(int x, int y) const
{
    if (!this->multTable.empty())
    {
        return this->multTable[x][y];
    }
    // x * y with y = parent(y) * gen(parentGen(y)), resolved iteratively:
    // unwind y's ancestor chain, then replay the generator word on x.
    std::vector<int> word;
    int cursor = y;
    while (cursor != 0)
    {
        word.push_back(this->parentGen[cursor]);
        cursor = this->parentOf[cursor];
    }
    int result = x;
    for (std::size_t k = word.size(); k > 0; --k)
    {
        result = this->genTable[result][word[k - 1]];
    }
    return result;
}

int MatGroup::inverseOf(int x) const
{
    return this->inverses[x];
}

MatGroup generateGroup(const std::vector<Mat2>& generators, long cap)
{
    if (generators.empty())
    {
        throw Error("at least one generator is required");
    }
    for (const Mat2& g : generators)
    {
        if (mat2Determinant(g).isZero())
        {
            throw SingularGeneratorError("generator " + matrixKey(g) + " is singular");
        }
    }

    MatGroup group;
    group.generators = generators;

    std::unordered_map<std::string, int> indexOf;
    const Mat2 identity = makeMat2(CycNum(1), CycNum(0), CycNum(0), CycNum(1));
    group.elements.push_back(identity);
    group.parentOf.push_back(-1);
    group.parentGen.push_back(-1);
    indexOf[matrixKey(identity)] = 0;

    const int numGens = static_cast<int>(generators.size());
    std::deque<int> frontier;
    frontier.push_back(0);
    group.genTable.push_back(std::vector<int>(numGens, -1));
    while (!frontier.empty())
    {
        const int at = frontier.front();
        frontier.pop_front();
        for (int g = 0; g < numGens; ++g)
        {
            const Mat2 product = group.elements[at] * generators[g];
            const std::string key = matrixKey(product);
            std::unordered_map<std::string, int>::iterator found = indexOf.find(key);
            int idx;
            if (found != indexOf.end())
            {
                idx = found->second;
            }
            else
            {
                idx = static_cast<int>(group.elements.size());
                if (idx >= cap)
                {
                    throw CapExceededError("group generation exceeded cap of "
                                           + std::to_string(cap) + " elements");
                }
                group.elements.push_back(product);
                group.parentOf.push_back(at);
                group.parentGen.push_back(g);
                group.genTable.push_back(std::vector<int>(numGens, -1));
                indexOf[key] = idx;
                frontier.push_back(idx);
            }
            group.genTable[at][g] = idx;
        }
    }

    const int n = group.order();
    group.generatorIndices.resize(numGens);
    for (int g = 0; g < numGens; ++g)
    {
        group.generatorIndices[g] = indexOf.at(matrixKey(generators[g]));
    }

    // Full multiplication table, built with integer lookups only:
    // x*y = (x * parent(y)) * gen(parentGen(y)), and BFS order guarantees
    // parentOf[y] < y, so one pass in index order suffices.
    if (n <= 256)
    {
        group.multTable.assign(n, std::vector<int>(n, -1));
        for (int x = 0; x < n; ++x)
        {
            group.multTable[x][0] = x;
            for (int y = 1; y < n; ++y)
            {
                group.multTable[x][y] =
                    group.genTable[group.multTable[x][group.parentOf[y]]][group.parentGen[y]];
            }
        }
    }

    group.inverses.assign(n, -1);
    for (int x = 0; x < n; ++x)
    {
        if (group.inverses[x] >= 0)
        {
            continue;
        }
        for (int y = 0; y < n; ++y)
        {
            if (group.multiply(x, y) == 0)
            {
                group.inverses[x] = y;
                group.inverses[y] = x;
                break;
            }
        }
        if (group.inverses[x] < 0)
        {
            throw ConsistencyError("element without inverse; closure is not a group");
        }
    }
    return group;
}

ConjugacyClasses conjugacyClasses(const MatGroup& group)
{
    const int n = group.order();
    std::vector<int> classOf(n, -1);
    std::vector<std::vector<int> > classes;

    // Orbits of the conjugation action; conjugating by generators alone
    // suffices, since they generate the group.
    for (int x = 0; x < n; ++x)
    {
        if (classOf[x] >= 0)
        {
            continue;
        }
        const int c = static_cast<int>(classes.size());
        std::vector<int> orbit;
        std::deque<int> frontier;
        classOf[x] = c;
        orbit.push_back(x);
        frontier.push_back(x);
        while (!frontier.empty())
        {
            const int at = frontier.front();
            frontier.pop_front();
            for (int gIdx : group.generatorIndices)
            {
                const int conj = group.multiply(group.multiply(group.inverseOf(gIdx), at), gIdx);
                if (classOf[conj] < 0)
                {
                    classOf[conj] = c;
                    orbit.push_back(conj);
                    frontier.push_back(conj);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(orbit);
    }

    // Canonical order: identity class first, then by (size, canonical text
    // of the minimal representative).
    const int numClasses = static_cast<int>(classes.size());
    std::vector<std::string> minKey(numClasses);
    std::vector<int> minRep(numClasses, -1);
    for (int c = 0; c < numClasses; ++c)
    {
        for (int x : classes[c])
        {
            const std::string key = matrixKey(group.elements[x]);
            if (minRep[c] < 0 || key < minKey[c])
            {
                minRep[c] = x;
                minKey[c] = key;
            }
        }
    }
    std::vector<int> perm(numClasses);
    for (int c = 0; c < numClasses; ++c)
    {
        perm[c] = c;
    }
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b)
              {
                  const bool idA = (classOf[0] == a);
                  const bool idB = (classOf[0] == b);
                  if (idA != idB)
                  {
                      return idA;
                  }
                  if (classes[a].size() != classes[b].size())
                  {
                      return classes[a].size() < classes[b].size();
                  }
                  return minKey[a] < minKey[b];
              });

    ConjugacyClasses out;
    out.members.resize(numClasses);
    out.representative.resize(numClasses);
    out.classOf.assign(n, -1);
    for (int c = 0; c < numClasses; ++c)
    {
        out.members[c] = classes[perm[c]];
        out.representative[c] = minRep[perm[c]];
        for (int x : out.members[c])
        {
            out.classOf[x] = c;
        }
    }
    return out;
}

std::vector<Mat2> builtinGenerators(const std::string& name)
{
    const CycNum one(1);
    const CycNum zero(0);
    if (name == "I")
    {
        const CycNum s = Rational(1, 2) * CycNum::sqrt2();
        return std::vector<Mat2>{makeMat2(s, s, s, -s), makeMat2(one, zero, zero, -one)};
    }
    if (name == "II")
    {
        const CycNum s = Rational(1, 2) * CycNum::sqrt2();
        return std::vector<Mat2>{makeMat2(s, s, s, -s), makeMat2(one, zero, zero, CycNum::i())};
    }
    if (name == "III")
    {
        const CycNum s = Rational(1, 3) * CycNum::sqrt3();
        return std::vector<Mat2>{makeMat2(s, CycNum(2) * s, s, -s),
                                 makeMat2(one, zero, zero, CycNum::omega3())};
    }
    if (name == "IV")
    {
        const Rational half(1, 2);
        return std::vector<Mat2>{
            makeMat2(half * one, Rational(3, 2) * one, half * one, -(half * one)),
            makeMat2(one, zero, zero, -one)};
    }
    throw ParseError("unknown group name '" + name + "' (expected I, II, III or IV)");
}

MatGroup builtinGroup(const std::string& name)
{
    return generateGroup(builtinGenerators(name));
}

const std::vector<std::string>& builtinGroupNames()
{
    static const std::vector<std::string> names{"I", "II", "III", "IV"};
    return names;
}

}  // namespace talg
