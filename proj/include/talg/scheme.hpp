/**
 * Group association schemes: the relations R_i = {(x, y) : y x^-1 in C_i}
 * indexed by conjugacy classes, their intersection numbers, and the
 * dimension bounds they induce for the Terwilliger algebra.
 */
#ifndef TALG_SCHEME_HPP
#define TALG_SCHEME_HPP

#include <vector>

#include "talg/matgroup.hpp"

namespace talg {

/** Intersection numbers p[i][j][k], all entries nonnegative. */
typedef std::vector<std::vector<std::vector<long> > > IntersectionTensor;

/**
 * The association scheme of a group: points are the group elements and
 * (x, y) lies in relation R_i exactly when y x^-1 falls in the i-th
 * conjugacy class (canonical class order; R_0 is equality).
 */
class Scheme
{
public:
    MatGroup group;
    ConjugacyClasses classes;
    /** relationTable[x][y] = i with (x, y) in R_i. */
    std::vector<std::vector<int> > relationTable;
    /** neighbors[i][x] = sorted list of y with (x, y) in R_i. */
    std::vector<std::vector<std::vector<int> > > neighbors;

    int order() const;
    int numClasses() const;
    int relation(int x, int y) const;
    std::vector<long> classSizes() const;
};

/** Builds the scheme (classes, relation table, neighbor lists) of a group. */
Scheme buildScheme(const MatGroup& group);

/**
 * Intersection numbers p_ij^k, read off the matrix expansion
 * A_i A_j = sum_k p_ij^k A_k.  The computation checks, exactly, that the
 * row-e counts are constant across every z in each class C_k and that they
 * agree with the pair counts #{(x, y) in C_i x C_j : x y = z_k}; a
 * ConsistencyError is thrown otherwise.
 */
IntersectionTensor intersectionNumbers(const Scheme& scheme);

/**
 * Verifies A_i A_j = sum_k p_ij^k A_k on the given rows of the full
 * adjacency matrices (every i, j).  Throws ConsistencyError on mismatch.
 */
void verifyBoseMesner(const Scheme& scheme, const IntersectionTensor& p,
                      const std::vector<int>& rows);

/** Number of (i, j, k) with p_ij^k != 0: a lower bound for dim T. */
long dimensionLowerBound(const IntersectionTensor& p);

/** sum_i |G| / |C_i|, an upper bound for dim T. */
long dimensionUpperBound(const Scheme& scheme);

}  // namespace talg

#endif  // TALG_SCHEME_HPP
