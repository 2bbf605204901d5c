/**
 * Finite groups of 2x2 matrices over Q(zeta_24): breadth-first generation,
 * exact multiplication tables, conjugacy classes in a canonical order, and
 * the four built-in groups G_I, G_II, G_III, G_IV attached to the classical
 * self-dual code types.
 */
#ifndef TALG_MATGROUP_HPP
#define TALG_MATGROUP_HPP

#include <string>
#include <vector>

#include "talg/cyclotomic.hpp"

namespace talg {

typedef Eigen::Matrix<CycNum, 2, 2> Mat2;

/** Builds a 2x2 matrix from row-major entries. */
Mat2 makeMat2(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d);

/** Canonical text key "[a, b; c, d]" (entries in canonical form). */
std::string matrixKey(const Mat2& m);

CycNum mat2Determinant(const Mat2& m);

/** Exact inverse; throws SingularGeneratorError when the determinant is 0. */
Mat2 mat2Inverse(const Mat2& m);

/**
 * A finite matrix group closed under multiplication.  Element 0 is the
 * identity; every element records how BFS reached it (parent element and
 * generator index), which lets products be resolved with integer lookups
 * instead of repeated matrix arithmetic.
 */
class MatGroup
{
public:
    std::vector<Mat2> elements;
    std::vector<Mat2> generators;
    /** Indices of the generators inside elements. */
    std::vector<int> generatorIndices;
    /** genTable[x][g] = index of elements[x] * generators[g]. */
    std::vector<std::vector<int> > genTable;
    /** elements[x] = elements[parentOf[x]] * generators[parentGen[x]] (x > 0). */
    std::vector<int> parentOf;
    std::vector<int> parentGen;
    /** inverses[x] = index of elements[x]^-1. */
    std::vector<int> inverses;
    /** Full multiplication table; materialized only when order() <= 256. */
    std::vector<std::vector<int> > multTable;

    int order() const;

    /** Index of elements[x] * elements[y], via table or parent-chain lookups. */
    int multiply(int x, int y) const;

    int inverseOf(int x) const;
};

/**
 * Generates the group spanned by the given matrices.
 *
 * @param generators Invertible matrices (SingularGeneratorError otherwise).
 * @param cap Upper bound on the group order; CapExceededError beyond it.
 */
MatGroup generateGroup(const std::vector<Mat2>& generators, long cap = 100000);

/** Conjugacy classes of a MatGroup in the canonical order. */
struct ConjugacyClasses
{
    /** members[c] = sorted element indices of class c. */
    std::vector<std::vector<int> > members;
    /** classOf[x] = class index containing element x. */
    std::vector<int> classOf;
    /** representative[c] = element with lexicographically least matrixKey. */
    std::vector<int> representative;
};

/**
 * Partition into conjugacy classes, ordered canonically: the identity class
 * first, then ascending (class size, canonical text of the minimal
 * representative).
 */
ConjugacyClasses conjugacyClasses(const MatGroup& group);

/**
 * Generators for one of the built-in groups, by name "I", "II", "III", "IV":
 *   I   (1/sqrt 2) [[1,1],[1,-1]]  and  diag(1, -1)
 *   II  (1/sqrt 2) [[1,1],[1,-1]]  and  diag(1, i)
 *   III (1/sqrt 3) [[1,2],[1,-1]]  and  diag(1, e^{2 pi i/3})
 *   IV  (1/2)      [[1,3],[1,-1]]  and  diag(1, -1)
 */
std::vector<Mat2> builtinGenerators(const std::string& name);

/** Generates a built-in group by name. */
MatGroup builtinGroup(const std::string& name);

/** The four built-in names, in order. */
const std::vector<std::string>& builtinGroupNames();

}  // namespace talg

#endif  // TALG_MATGROUP_HPP
