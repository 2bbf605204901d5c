/**
 * Published reference values for the four built-in groups and their
 * invariant rings, as printed in the source tables: orders, class sizes,
 * block-dimension matrices, algebra dimensions, center dimensions,
 * Wedderburn degrees, E-polynomial closed forms, fundamental invariants
 * and the classical code fixtures.
 *
 * Everything here is verbatim reference data; computed results are
 * compared against it and any disagreement is reported, never patched.
 */
#ifndef TALG_REFERENCE_HPP
#define TALG_REFERENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "talg/invariants.hpp"
#include "talg/linalg.hpp"

namespace talg {

/** Published per-group data. */
struct PublishedGroupData
{
    std::string name;
    long order;
    int numClasses;
    /** Conjugacy class sizes, ascending. */
    std::vector<long> classSizes;
    /** Published block-dimension matrix (class order as printed). */
    IntMatrix blockCounts;
    /** Published dimension of the Terwilliger algebra. */
    long dimT;
    long centerDim;
    /** Published Wedderburn degrees, ascending. */
    std::vector<long> degrees;
    /** Degrees (a, b) with Molien series 1/((1-t^a)(1-t^b)). */
    std::pair<int, int> molienDegrees;
};

const PublishedGroupData& publishedGroupData(const std::string& name);

/** A published E-polynomial closed form. */
struct PublishedEPoly
{
    /** Label as printed (for G_IV the printed subscripts differ from the
     *  Reynolds degrees). */
    std::string label;
    /** Degree k with phi = Reynolds(x^k). */
    int reynoldsDegree;
    /** The closed form exactly as printed. */
    BivarPoly printedForm;
};

const std::vector<PublishedEPoly>& publishedEPolynomials(const std::string& name);

/** Published fundamental invariants f (even/symmetric) and g. */
struct PublishedInvariantPair
{
    BivarPoly f;
    BivarPoly g;
};

const PublishedInvariantPair& publishedInvariants(const std::string& name);

/** A published identity expressing f or g in the two E-polynomials. */
struct PublishedIdentity
{
    std::string name;
    /** 'f' or 'g'. */
    char target;
    /** Right-hand side in powers of the two published E-polynomials. */
    std::vector<GeneratorTerm> expression;
};

const std::vector<PublishedIdentity>& publishedIdentities(const std::string& name);

/** Published classification data for the built-in code fixtures. */
struct PublishedCodeData
{
    std::string fixture;
    std::string type;
    /** Group whose generators fix the weight enumerator. */
    std::string group;
    /** "euclidean" or "hermitian". */
    std::string duality;
};

const std::vector<PublishedCodeData>& publishedCodeData();

/**
 * Searches for a relabeling of classes identifying two block-dimension
 * matrices: a permutation pi with published(r, c) = computed(pi[r], pi[c]).
 *
 * @returns pi, or std::nullopt when the matrices are not
 *          permutation-equivalent.
 */
std::optional<std::vector<int> > findBlockPermutation(const IntMatrix& computed,
                                                      const IntMatrix& published);

}  // namespace talg

#endif  // TALG_REFERENCE_HPP
