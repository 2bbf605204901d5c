/**
 * Terwilliger algebras of group association schemes with respect to the
 * identity base point: exact basis closure in block form, dimension data,
 * the center, primitive central idempotents, and Wedderburn degrees.
 *
 * All linear algebra is performed block by block.  The dual idempotent
 * E_i* cuts out the rows/columns indexed by the class C_i, so every
 * element of the algebra is stored as a collection of small dense blocks
 * E_i* M E_k*, each at most |C_i| x |C_k|.
 */
#ifndef TALG_TERWILLIGER_HPP
#define TALG_TERWILLIGER_HPP

#include <map>
#include <utility>
#include <vector>

#include "talg/cyclotomic.hpp"
#include "talg/linalg.hpp"
#include "talg/scheme.hpp"

namespace talg {

typedef Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> LongMatrix;

/** One basis element of the algebra, supported on a single block. */
struct TBasisElement
{
    /** Row class index i (rows of mat enumerate C_i in ascending order). */
    int left;
    /** Column class index k. */
    int right;
    RatMatrix mat;
};

/** The Terwilliger algebra with its canonical block-wise basis. */
class TAlgebra
{
public:
    Scheme scheme;
    IntersectionTensor p;
    /** Basis elements grouped by ascending (left, right), rows in reduced
     *  echelon order within each block. */
    std::vector<TBasisElement> basis;
    /** blockIndex[(i,k)] = indices into basis supported on block (i,k). */
    std::map<std::pair<int, int>, std::vector<int> > blockIndex;
    /** dimHistory[d-1] = dim of the span of products of length <= d. */
    std::vector<long> dimHistory;
    /** Smallest depth whose span is already closed under multiplication. */
    int stabilizationDepth;

    long dimT() const;

    /** s x s matrix of per-block span dimensions. */
    IntMatrix blockCounts() const;

    /** Basis indices on block (i, k), empty if the block vanishes. */
    const std::vector<int>& blockBasis(int i, int k) const;
};

/**
 * Diagonals of the dual idempotents: result[i][x] = 1 exactly when x lies
 * in the i-th conjugacy class.
 */
std::vector<std::vector<int> > buildDualIdempotents(const Scheme& scheme);

/**
 * Generates the Terwilliger algebra by closing the span of the adjacency
 * blocks E_i* A_j E_k* under multiplication, one depth layer at a time.
 *
 * @param maxDepth Throw DepthExceededError if the span still grows past
 *                 products of this length.
 * @param threads Worker threads for product generation (0 = automatic).
 */
TAlgebra basisClosure(const Scheme& scheme, const IntersectionTensor& p, int maxDepth = 4,
                      int threads = 0);

/** Embeds basis element b into the full |G| x |G| matrix space. */
RatMatrix fullMatrix(const TAlgebra& alg, int basisIndex);

/**
 * The center of the algebra.  Central elements are supported on diagonal
 * blocks only; each is recorded by its coefficients over the diagonal-block
 * basis elements.
 */
struct CenterBasis
{
    /** Indices (into TAlgebra::basis) of the diagonal-block elements. */
    std::vector<int> diagIndices;
    /** dim x diagIndices.size(), rows in reduced echelon form. */
    RatMatrix coefficients;

    long dim() const;
};

/**
 * Computes the center exactly, as the joint kernel of all commutator
 * constraints [z, b] = 0 against every basis element b.
 */
CenterBasis centerBasis(const TAlgebra& alg, int threads = 0);

/** Block (i, i) of the element with the given diagonal-basis coefficients. */
RatMatrix centerBlock(const TAlgebra& alg, const CenterBasis& center, const RatVector& eCoords,
                      int classIndex);
CycMatrix centerBlockCyc(const TAlgebra& alg, const CenterBasis& center,
                         const CycVector& eCoords, int classIndex);

/** Regular representation of the center on itself. */
struct CenterStructure
{
    /** leftMult[a](b, c) = r_ab^c where z_a z_b = sum_c r_ab^c z_c. */
    std::vector<RatMatrix> leftMult;
    /** Coordinates of the algebra identity in the z basis. */
    RatVector identityCoords;
};

CenterStructure centerStructure(const TAlgebra& alg, const CenterBasis& center);

/** How a primitive central idempotent was obtained. */
enum class SplitPath
{
    RationalFactor,
    QuadraticCyclotomic,
    NumericReconstruction
};

struct CentralIdempotent
{
    /** Coordinates over the center basis z_1..z_m. */
    CycVector centerCoords;
    /** Coordinates over the diagonal-block basis elements. */
    CycVector eCoords;
    /** True when every coordinate is rational. */
    bool rational;
    RatVector eCoordsRational;
    SplitPath path;
};

/**
 * The primitive central idempotents, with entries in Q(zeta_24).
 *
 * A separating element of the center is located first (basis elements, then
 * seeded random combinations); its characteristic polynomial is factored
 * over Q, and each factor is refined to eigenvalue-level projectors: linear
 * factors directly, quadratic factors through square roots in Q(zeta_24),
 * and any remaining factor through high-precision numeric projectors whose
 * coordinates must reconstruct to rationals.  Every idempotent is verified
 * exactly (orthogonality, idempotence, summing to the identity); a
 * SplittingError is thrown when the splitting cannot be realized inside
 * Q(zeta_24).
 */
std::vector<CentralIdempotent> centralIdempotents(const TAlgebra& alg, const CenterBasis& center,
                                                  int threads = 0);

/**
 * Wedderburn degrees aligned with the given idempotents: the two-sided
 * ideal T e_a has dimension d_a^2, and d_a is returned.  Throws
 * NonSquareRankError if some ideal dimension is not a perfect square.
 */
std::vector<long> wedderburnDegrees(const TAlgebra& alg, const CenterBasis& center,
                                    const std::vector<CentralIdempotent>& idempotents,
                                    int threads = 0);

}  // namespace talg

#endif  // TALG_TERWILLIGER_HPP
