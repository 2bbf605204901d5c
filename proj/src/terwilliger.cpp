/**
 * Implementation of the Terwilliger algebra pipeline: block-wise basis
 * closure, center, primitive central idempotents and Wedderburn degrees.
 */
#include "talg/terwilliger.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "talg/errors.hpp"
#include "talg/parallel.hpp"
#include "talg/polynomials.hpp"

namespace talg {

long TAlgebra::dimT() const
{
    return static_cast<long>(this->basis.size());
}

IntMatrix TAlgebra::blockCounts() const
{
    const int s = this->scheme.numClasses();
    IntMatrix m = IntMatrix::Zero(s, s);
    for (const auto& entry : this->blockIndex)
    {
        m(entry.first.first, entry.first.second) = static_cast<std::int64_t>(entry.second.size());
    }
    return m;
}

const std::vector<int>& TAlgebra::blockBasis(int i, int k) const
{
    static const std::vector<int> empty;
    const auto it = this->blockIndex.find(std::make_pair(i, k));
    return it == this->blockIndex.end() ? empty : it->second;
}

std::vector<std::vector<int> > buildDualIdempotents(const Scheme& scheme)
{
    std::vector<std::vector<int> > diag(scheme.numClasses(),
                                        std::vector<int>(scheme.order(), 0));
    for (int i = 0; i < scheme.numClasses(); ++i)
    {
        for (int x : scheme.classes.members[i])
        {
            diag[i][x] = 1;
        }
    }
    return diag;
}

namespace {

/** A product of adjacency blocks, tagged with its block position. */
struct BlockWord
{
    int left;
    int right;
    LongMatrix mat;
};

RatVector vectorizeLong(const LongMatrix& m)
{
    RatVector v(m.rows() * m.cols());
    int at = 0;
    for (int r = 0; r < m.rows(); ++r)
    {
        for (int c = 0; c < m.cols(); ++c)
        {
            v(at++) = Rational(static_cast<long long>(m(r, c)));
        }
    }
    return v;
}

RatVector vectorizeRat(const RatMatrix& m)
{
    RatVector v(m.rows() * m.cols());
    int at = 0;
    for (int r = 0; r < m.rows(); ++r)
    {
        for (int c = 0; c < m.cols(); ++c)
        {
            v(at++) = m(r, c);
        }
    }
    return v;
}

CycVector vectorizeCyc(const CycMatrix& m)
{
    CycVector v(m.rows() * m.cols());
    int at = 0;
    for (int r = 0; r < m.rows(); ++r)
    {
        for (int c = 0; c < m.cols(); ++c)
        {
            v(at++) = m(r, c);
        }
    }
    return v;
}

RatMatrix devectorizeRow(const RatMatrix& rows, int r, int nrows, int ncols)
{
    RatMatrix m(nrows, ncols);
    int at = 0;
    for (int i = 0; i < nrows; ++i)
    {
        for (int j = 0; j < ncols; ++j)
        {
            m(i, j) = rows(r, at++);
        }
    }
    return m;
}

}  // namespace

TAlgebra basisClosure(const Scheme& scheme, const IntersectionTensor& p, int maxDepth,
                      int threads)
{
    if (maxDepth < 1)
    {
        throw Error("basisClosure: maxDepth must be at least 1");
    }
    TAlgebra alg;
    alg.scheme = scheme;
    alg.p = p;
    const int s = scheme.numClasses();

    // Depth-1 generators: the nonzero blocks E_i* A_j E_k*, in (i, k, j) order.
    std::vector<BlockWord> gens;
    std::vector<std::vector<int> > gensByLeft(s);
    for (int i = 0; i < s; ++i)
    {
        const std::vector<int>& rows = scheme.classes.members[i];
        for (int k = 0; k < s; ++k)
        {
            const std::vector<int>& cols = scheme.classes.members[k];
            for (int j = 0; j < s; ++j)
            {
                if (p[i][j][k] == 0)
                {
                    continue;
                }
                LongMatrix mat = LongMatrix::Zero(rows.size(), cols.size());
                for (std::size_t r = 0; r < rows.size(); ++r)
                {
                    for (std::size_t c = 0; c < cols.size(); ++c)
                    {
                        if (scheme.relation(rows[r], cols[c]) == j)
                        {
                            mat(r, c) = 1;
                        }
                    }
                }
                gensByLeft[i].push_back(static_cast<int>(gens.size()));
                gens.push_back(BlockWord{i, k, std::move(mat)});
            }
        }
    }

    std::map<std::pair<int, int>, SpanTracker<Rational> > trackers;
    long totalRank = 0;
    const auto feed = [&](const BlockWord& w) -> bool
    {
        const std::pair<int, int> key(w.left, w.right);
        const int width = static_cast<int>(w.mat.rows() * w.mat.cols());
        auto it = trackers.try_emplace(key, width).first;
        if (it->second.rank() == width)
        {
            return false;  // block already saturated
        }
        if (!it->second.add(vectorizeLong(w.mat)))
        {
            return false;
        }
        ++totalRank;
        return true;
    };

    std::vector<BlockWord> lastAdded;
    for (const BlockWord& g : gens)
    {
        if (feed(g))
        {
            lastAdded.push_back(g);
        }
    }
    alg.dimHistory.push_back(totalRank);
    alg.stabilizationDepth = 1;

    for (int depth = 2;; ++depth)
    {
        // Words of length `depth`: (new word of length depth-1) x (generator).
        std::vector<std::pair<int, int> > tasks;
        for (std::size_t w = 0; w < lastAdded.size(); ++w)
        {
            for (int g : gensByLeft[lastAdded[w].right])
            {
                tasks.emplace_back(static_cast<int>(w), g);
            }
        }
        std::vector<BlockWord> products = parallelMap<BlockWord>(
            tasks.size(), threads,
            [&](std::size_t t)
            {
                const BlockWord& w = lastAdded[tasks[t].first];
                const BlockWord& g = gens[tasks[t].second];
                return BlockWord{w.left, g.right, w.mat * g.mat};
            });
        std::vector<BlockWord> added;
        for (BlockWord& prod : products)
        {
            if (feed(prod))
            {
                added.push_back(std::move(prod));
            }
        }
        if (added.empty())
        {
            alg.stabilizationDepth = depth - 1;
            break;
        }
        if (depth > maxDepth)
        {
            throw DepthExceededError("basis closure still growing at depth "
                                     + std::to_string(depth) + " (maxDepth "
                                     + std::to_string(maxDepth) + ")");
        }
        alg.dimHistory.push_back(totalRank);
        lastAdded = std::move(added);
    }

    // Materialize the canonical basis: blocks ascending, echelon rows within.
    for (const auto& entry : trackers)
    {
        const int i = entry.first.first;
        const int k = entry.first.second;
        const int nrows = static_cast<int>(scheme.classes.members[i].size());
        const int ncols = static_cast<int>(scheme.classes.members[k].size());
        const RatMatrix rows = entry.second.toDenseMatrix();
        std::vector<int>& indices = alg.blockIndex[entry.first];
        for (int r = 0; r < rows.rows(); ++r)
        {
            indices.push_back(static_cast<int>(alg.basis.size()));
            alg.basis.push_back(TBasisElement{i, k, devectorizeRow(rows, r, nrows, ncols)});
        }
    }
    return alg;
}

RatMatrix fullMatrix(const TAlgebra& alg, int basisIndex)
{
    const TBasisElement& el = alg.basis[basisIndex];
    const std::vector<int>& rows = alg.scheme.classes.members[el.left];
    const std::vector<int>& cols = alg.scheme.classes.members[el.right];
    const int n = alg.scheme.order();
    RatMatrix m = RatMatrix::Zero(n, n);
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        for (std::size_t c = 0; c < cols.size(); ++c)
        {
            m(rows[r], cols[c]) = el.mat(r, c);
        }
    }
    return m;
}

long CenterBasis::dim() const
{
    return static_cast<long>(this->coefficients.rows());
}

CenterBasis centerBasis(const TAlgebra& alg, int threads)
{
    const int s = alg.scheme.numClasses();
    std::vector<int> diagIndices;
    for (std::size_t idx = 0; idx < alg.basis.size(); ++idx)
    {
        if (alg.basis[idx].left == alg.basis[idx].right)
        {
            diagIndices.push_back(static_cast<int>(idx));
        }
    }
    const int s0 = static_cast<int>(diagIndices.size());
    std::vector<std::vector<int> > diagPosByClass(s);
    for (int pos = 0; pos < s0; ++pos)
    {
        diagPosByClass[alg.basis[diagIndices[pos]].left].push_back(pos);
    }

    // Commutator constraints: an element sum_m c_m e_m over the diagonal
    // basis is central iff for every basis element b on block (i, k) the
    // entries of sum_m c_m (e_m b - b e_m) vanish.  Only diagonal elements
    // of blocks i and k contribute, so each b yields a small local system;
    // its reduced rows are pushed into one global tracker over all c_m.
    const std::size_t nb = alg.basis.size();
    std::vector<std::vector<SparseRow<Rational> > > localRows =
        parallelMap<std::vector<SparseRow<Rational> > >(
            nb, threads,
            [&](std::size_t j)
            {
                const TBasisElement& b = alg.basis[j];
                const int i = b.left;
                const int k = b.right;
                std::vector<int> unknowns = diagPosByClass[i];
                if (k != i)
                {
                    unknowns.insert(unknowns.end(), diagPosByClass[k].begin(),
                                    diagPosByClass[k].end());
                    std::sort(unknowns.begin(), unknowns.end());
                }
                const int entries = static_cast<int>(b.mat.rows() * b.mat.cols());
                RatMatrix local = RatMatrix::Zero(entries, unknowns.size());
                for (std::size_t u = 0; u < unknowns.size(); ++u)
                {
                    const TBasisElement& e = alg.basis[diagIndices[unknowns[u]]];
                    RatMatrix contrib = RatMatrix::Zero(b.mat.rows(), b.mat.cols());
                    if (e.left == i)
                    {
                        contrib += e.mat * b.mat;
                    }
                    if (e.left == k)
                    {
                        contrib -= b.mat * e.mat;
                    }
                    local.col(u) = vectorizeRat(contrib);
                }
                const std::pair<RatMatrix, int> reduced = rowEchelonForm<Rational>(local);
                std::vector<SparseRow<Rational> > rows;
                for (int r = 0; r < reduced.second; ++r)
                {
                    SparseRow<Rational> row;
                    for (std::size_t u = 0; u < unknowns.size(); ++u)
                    {
                        if (reduced.first(r, u) != 0)
                        {
                            row.emplace_back(unknowns[u], reduced.first(r, u));
                        }
                    }
                    rows.push_back(std::move(row));
                }
                return rows;
            });

    SpanTracker<Rational> constraints(s0);
    for (const std::vector<SparseRow<Rational> >& rows : localRows)
    {
        for (const SparseRow<Rational>& row : rows)
        {
            constraints.add(row);
        }
    }

    const std::vector<RatVector> kernel = kernelBasis<Rational>(constraints.toDenseMatrix());
    RatMatrix stacked(kernel.size(), s0);
    for (std::size_t a = 0; a < kernel.size(); ++a)
    {
        stacked.row(a) = kernel[a].transpose();
    }
    const std::pair<RatMatrix, int> canonical = rowEchelonForm<Rational>(stacked);
    if (canonical.second != static_cast<int>(kernel.size()))
    {
        throw ConsistencyError("kernel basis unexpectedly dependent");
    }

    CenterBasis cb;
    cb.diagIndices = diagIndices;
    cb.coefficients = canonical.first.topRows(canonical.second);
    return cb;
}

RatMatrix centerBlock(const TAlgebra& alg, const CenterBasis& center, const RatVector& eCoords,
                      int classIndex)
{
    const int size = static_cast<int>(alg.scheme.classes.members[classIndex].size());
    RatMatrix block = RatMatrix::Zero(size, size);
    for (std::size_t pos = 0; pos < center.diagIndices.size(); ++pos)
    {
        const TBasisElement& e = alg.basis[center.diagIndices[pos]];
        if (e.left != classIndex || eCoords(pos) == 0)
        {
            continue;
        }
        block += eCoords(pos) * e.mat;
    }
    return block;
}

CycMatrix centerBlockCyc(const TAlgebra& alg, const CenterBasis& center,
                         const CycVector& eCoords, int classIndex)
{
    const int size = static_cast<int>(alg.scheme.classes.members[classIndex].size());
    CycMatrix block = CycMatrix::Constant(size, size, CycNum(0));
    for (std::size_t pos = 0; pos < center.diagIndices.size(); ++pos)
    {
        const TBasisElement& e = alg.basis[center.diagIndices[pos]];
        if (e.left != classIndex || eCoords(pos).isZero())
        {
            continue;
        }
        for (int r = 0; r < size; ++r)
        {
            for (int c = 0; c < size; ++c)
            {
                if (e.mat(r, c) != 0)
                {
                    block(r, c) += e.mat(r, c) * eCoords(pos);
                }
            }
        }
    }
    return block;
}

namespace {

/** Diagonal blocks of the center element with the given e-coordinates. */
std::vector<RatMatrix> centerBlocksAll(const TAlgebra& alg, const CenterBasis& center,
                                       const RatVector& eCoords)
{
    std::vector<RatMatrix> blocks;
    for (int i = 0; i < alg.scheme.numClasses(); ++i)
    {
        blocks.push_back(centerBlock(alg, center, eCoords, i));
    }
    return blocks;
}

RatVector stackBlocks(const std::vector<RatMatrix>& blocks)
{
    long total = 0;
    for (const RatMatrix& b : blocks)
    {
        total += b.rows() * b.cols();
    }
    RatVector v(total);
    long at = 0;
    for (const RatMatrix& b : blocks)
    {
        for (int r = 0; r < b.rows(); ++r)
        {
            for (int c = 0; c < b.cols(); ++c)
            {
                v(at++) = b(r, c);
            }
        }
    }
    return v;
}

}  // namespace

CenterStructure centerStructure(const TAlgebra& alg, const CenterBasis& center)
{
    const int m = static_cast<int>(center.dim());
    const int s = alg.scheme.numClasses();

    std::vector<std::vector<RatMatrix> > zBlocks;
    for (int a = 0; a < m; ++a)
    {
        zBlocks.push_back(centerBlocksAll(alg, center, center.coefficients.row(a).transpose()));
    }

    long length = 0;
    for (int i = 0; i < s; ++i)
    {
        const long size = static_cast<long>(alg.scheme.classes.members[i].size());
        length += size * size;
    }
    RatMatrix zStacked(length, m);
    for (int a = 0; a < m; ++a)
    {
        zStacked.col(a) = stackBlocks(zBlocks[a]);
    }

    CenterStructure cs;
    cs.leftMult.assign(m, RatMatrix::Zero(m, m));
    for (int a = 0; a < m; ++a)
    {
        for (int b = 0; b < m; ++b)
        {
            std::vector<RatMatrix> product;
            for (int i = 0; i < s; ++i)
            {
                product.push_back(zBlocks[a][i] * zBlocks[b][i]);
            }
            const std::optional<RatVector> coords =
                solveLinear<Rational>(zStacked, stackBlocks(product));
            if (!coords.has_value())
            {
                throw ConsistencyError("center is not closed under multiplication");
            }
            for (int c = 0; c < m; ++c)
            {
                cs.leftMult[a](b, c) = (*coords)(c);
            }
        }
    }

    std::vector<RatMatrix> identityBlocks;
    for (int i = 0; i < s; ++i)
    {
        const int size = static_cast<int>(alg.scheme.classes.members[i].size());
        identityBlocks.push_back(RatMatrix::Identity(size, size));
    }
    const std::optional<RatVector> one = solveLinear<Rational>(zStacked,
                                                               stackBlocks(identityBlocks));
    if (!one.has_value())
    {
        throw ConsistencyError("identity element does not lie in the computed center");
    }
    cs.identityCoords = *one;
    return cs;
}

namespace {

/** Complex vector/matrix helpers at working precision (numeric fallback). */
struct Cplx
{
    BigFloat re;
    BigFloat im;
};

Cplx cAdd(const Cplx& a, const Cplx& b)
{
    return Cplx{a.re + b.re, a.im + b.im};
}

Cplx cSub(const Cplx& a, const Cplx& b)
{
    return Cplx{a.re - b.re, a.im - b.im};
}

Cplx cMul(const Cplx& a, const Cplx& b)
{
    return Cplx{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Cplx cDiv(const Cplx& a, const Cplx& b)
{
    const BigFloat n = b.re * b.re + b.im * b.im;
    return Cplx{(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

BigFloat ratToBigFloat(const Rational& r)
{
    return BigFloat(numerator(r).str()) / BigFloat(denominator(r).str());
}

/** Coordinates of u * v in the z basis, from the structure constants. */
CycVector centerMultiply(const std::vector<RatMatrix>& leftMult, const CycVector& u,
                         const CycVector& v)
{
    const int m = static_cast<int>(u.rows());
    CycVector out = CycVector::Constant(m, CycNum(0));
    for (int a = 0; a < m; ++a)
    {
        if (u(a).isZero())
        {
            continue;
        }
        for (int b = 0; b < m; ++b)
        {
            if (v(b).isZero())
            {
                continue;
            }
            const CycNum ab = u(a) * v(b);
            for (int c = 0; c < m; ++c)
            {
                if (leftMult[a](b, c) != 0)
                {
                    out(c) += leftMult[a](b, c) * ab;
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<CentralIdempotent> centralIdempotents(const TAlgebra& alg, const CenterBasis& center,
                                                  int threads)
{
    (void)threads;
    const int m = static_cast<int>(center.dim());
    std::vector<CentralIdempotent> out;
    if (m == 0)
    {
        return out;
    }
    const CenterStructure cs = centerStructure(alg, center);

    // Regular action on coordinates: coords(z_a w) = leftMult[a]^T coords(w).
    std::vector<RatMatrix> action;
    for (int a = 0; a < m; ++a)
    {
        action.push_back(cs.leftMult[a].transpose());
    }

    // Separating element: its action must have a squarefree characteristic
    // polynomial.  Candidates: the basis elements first, then reproducible
    // pseudo-random small-integer combinations.
    std::mt19937 rng(24);
    RatMatrix actionW;
    RatPoly chi;
    bool foundSeparating = false;
    for (int attempt = 0; attempt < 50 && !foundSeparating; ++attempt)
    {
        RatMatrix candidate = RatMatrix::Zero(m, m);
        if (attempt < m)
        {
            candidate = action[attempt];
        }
        else
        {
            for (int a = 0; a < m; ++a)
            {
                const long coeff = static_cast<long>(rng() % 19ul) - 9;
                candidate += Rational(coeff) * action[a];
            }
        }
        const RatPoly poly = charPoly(candidate);
        if (degree(gcdPoly(poly, derivativePoly(poly))) == 0)
        {
            actionW = candidate;
            chi = poly;
            foundSeparating = true;
        }
    }
    if (!foundSeparating)
    {
        throw SplittingError("no separating element of the center was found");
    }

    const std::vector<RatPoly> factors = factorOverQ(chi);
    bool usedNumeric = false;

    for (const RatPoly& f : factors)
    {
        // Rational CRT projector for the component of this factor:
        // h = 1 mod f, h = 0 mod chi/f.
        const RatPoly cofactor = divModPoly(chi, f).first;
        const std::tuple<RatPoly, RatPoly, RatPoly> bezout = extendedGcdPoly(f, cofactor);
        if (degree(std::get<0>(bezout)) != 0)
        {
            throw ConsistencyError("characteristic polynomial factors are not coprime");
        }
        const RatPoly h = mulPoly(std::get<2>(bezout), cofactor);
        const RatMatrix hw = evaluatePolyMatrix(h, actionW);
        const RatVector componentCoords = hw * cs.identityCoords;

        if (degree(f) == 1)
        {
            CentralIdempotent idem;
            idem.centerCoords = CycVector::Constant(m, CycNum(0));
            for (int a = 0; a < m; ++a)
            {
                idem.centerCoords(a) = CycNum(componentCoords(a));
            }
            idem.path = SplitPath::RationalFactor;
            out.push_back(std::move(idem));
            continue;
        }

        std::optional<CycNum> sqrtDisc;
        if (degree(f) == 2)
        {
            const Rational disc = f[1] * f[1] - Rational(4) * f[0];
            sqrtDisc = sqrtInCyclotomic(disc);
        }
        if (degree(f) == 2 && sqrtDisc.has_value())
        {
            // Roots (-b +- sqrt(disc)) / 2 in Q(zeta_24); split the rational
            // projector with one Lagrange step per root.
            const CycNum b(f[1]);
            const CycNum lambdaPlus = Rational(1, 2) * (-b + *sqrtDisc);
            const CycNum lambdaMinus = Rational(1, 2) * (-b - *sqrtDisc);
            CycMatrix actionCyc = CycMatrix::Constant(m, m, CycNum(0));
            for (int r = 0; r < m; ++r)
            {
                for (int c = 0; c < m; ++c)
                {
                    actionCyc(r, c) = CycNum(actionW(r, c));
                }
            }
            CycVector compCyc = CycVector::Constant(m, CycNum(0));
            for (int a = 0; a < m; ++a)
            {
                compCyc(a) = CycNum(componentCoords(a));
            }
            const std::pair<CycNum, CycNum> pairs[2] = {
                std::make_pair(lambdaPlus, lambdaMinus),
                std::make_pair(lambdaMinus, lambdaPlus)};
            for (const std::pair<CycNum, CycNum>& lam : pairs)
            {
                CycVector v = actionCyc * compCyc;
                for (int a = 0; a < m; ++a)
                {
                    v(a) -= lam.second * compCyc(a);
                }
                const CycNum scale = (lam.first - lam.second).inverse();
                for (int a = 0; a < m; ++a)
                {
                    v(a) *= scale;
                }
                CentralIdempotent idem;
                idem.centerCoords = v;
                idem.path = SplitPath::QuadraticCyclotomic;
                out.push_back(std::move(idem));
            }
            continue;
        }

        // Numeric fallback: high-precision eigenvalue projectors whose
        // coordinates must reconstruct to exact rationals.
        usedNumeric = true;
        const unsigned savedDigits = BigFloat::default_precision();
        BigFloat::default_precision(170);  // ~564 bits
        const std::vector<std::pair<BigFloat, BigFloat> > roots = complexRoots(f, 512);
        const BigFloat tol = ldexp(BigFloat(1), -100);
        const Integer denomBound = (Integer(1) << 64);
        std::vector<std::vector<Cplx> > actionF(m, std::vector<Cplx>(m));
        for (int r = 0; r < m; ++r)
        {
            for (int c = 0; c < m; ++c)
            {
                actionF[r][c] = Cplx{ratToBigFloat(actionW(r, c)), BigFloat(0)};
            }
        }
        for (const std::pair<BigFloat, BigFloat>& lambda : roots)
        {
            std::vector<Cplx> v(m);
            for (int a = 0; a < m; ++a)
            {
                v[a] = Cplx{ratToBigFloat(componentCoords(a)), BigFloat(0)};
            }
            for (const std::pair<BigFloat, BigFloat>& mu : roots)
            {
                if (mu.first == lambda.first && mu.second == lambda.second)
                {
                    continue;
                }
                std::vector<Cplx> next(m);
                for (int r = 0; r < m; ++r)
                {
                    Cplx acc{BigFloat(0), BigFloat(0)};
                    for (int c = 0; c < m; ++c)
                    {
                        acc = cAdd(acc, cMul(actionF[r][c], v[c]));
                    }
                    acc = cSub(acc, cMul(Cplx{mu.first, mu.second}, v[r]));
                    next[r] = cDiv(acc, cSub(Cplx{lambda.first, lambda.second},
                                             Cplx{mu.first, mu.second}));
                }
                v = next;
            }
            CentralIdempotent idem;
            idem.centerCoords = CycVector::Constant(m, CycNum(0));
            for (int a = 0; a < m; ++a)
            {
                BigFloat imAbs = v[a].im;
                if (imAbs < 0)
                {
                    imAbs = -imAbs;
                }
                if (imAbs > tol)
                {
                    BigFloat::default_precision(savedDigits);
                    throw SplittingError(
                        "numeric projector has a non-real coordinate; the splitting field "
                        "does not embed in Q(zeta_24)");
                }
                const std::optional<Rational> c = rationalReconstruct(v[a].re, denomBound, tol);
                if (!c.has_value())
                {
                    BigFloat::default_precision(savedDigits);
                    throw SplittingError(
                        "numeric projector coordinate does not reconstruct to a rational");
                }
                idem.centerCoords(a) = CycNum(*c);
            }
            idem.path = SplitPath::NumericReconstruction;
            out.push_back(std::move(idem));
        }
        BigFloat::default_precision(savedDigits);
    }

    const auto fail = [&](const std::string& message) -> void
    {
        if (usedNumeric)
        {
            throw SplittingError(message);
        }
        throw ConsistencyError(message);
    };

    if (static_cast<int>(out.size()) != m)
    {
        fail("expected " + std::to_string(m) + " primitive idempotents, found "
             + std::to_string(out.size()));
    }

    // Exact verification at the coordinate level: orthogonal idempotents
    // summing to the identity.
    CycVector sum = CycVector::Constant(m, CycNum(0));
    for (const CentralIdempotent& idem : out)
    {
        sum += idem.centerCoords;
    }
    for (int a = 0; a < m; ++a)
    {
        if (sum(a) != CycNum(cs.identityCoords(a)))
        {
            fail("idempotents do not sum to the identity");
        }
    }
    for (std::size_t a = 0; a < out.size(); ++a)
    {
        for (std::size_t b = a; b < out.size(); ++b)
        {
            const CycVector prod =
                centerMultiply(cs.leftMult, out[a].centerCoords, out[b].centerCoords);
            for (int c = 0; c < m; ++c)
            {
                const CycNum expected = (a == b) ? out[a].centerCoords(c) : CycNum(0);
                if (prod(c) != expected)
                {
                    fail("idempotent products fail orthogonality/idempotence");
                }
            }
        }
    }

    // Derived coordinates over the diagonal-block basis, and rationality.
    const int s0 = static_cast<int>(center.diagIndices.size());
    for (CentralIdempotent& idem : out)
    {
        idem.eCoords = CycVector::Constant(s0, CycNum(0));
        for (int pos = 0; pos < s0; ++pos)
        {
            CycNum acc(0);
            for (int a = 0; a < m; ++a)
            {
                if (center.coefficients(a, pos) != 0)
                {
                    acc += center.coefficients(a, pos) * idem.centerCoords(a);
                }
            }
            idem.eCoords(pos) = acc;
        }
        idem.rational = true;
        for (int a = 0; a < m && idem.rational; ++a)
        {
            idem.rational = idem.centerCoords(a).isRational();
        }
        if (idem.rational)
        {
            idem.eCoordsRational = RatVector::Constant(s0, Rational(0));
            for (int pos = 0; pos < s0; ++pos)
            {
                idem.eCoordsRational(pos) = *idem.eCoords(pos).asRational();
            }
        }
    }

    // Exact verification at the matrix level, block by block.
    for (int i = 0; i < alg.scheme.numClasses(); ++i)
    {
        const int size = static_cast<int>(alg.scheme.classes.members[i].size());
        CycMatrix blockSum = CycMatrix::Constant(size, size, CycNum(0));
        for (const CentralIdempotent& idem : out)
        {
            const CycMatrix block = centerBlockCyc(alg, center, idem.eCoords, i);
            const CycMatrix square = block * block;
            for (int r = 0; r < size; ++r)
            {
                for (int c = 0; c < size; ++c)
                {
                    if (square(r, c) != block(r, c))
                    {
                        fail("materialized idempotent is not idempotent on block "
                             + std::to_string(i));
                    }
                }
            }
            blockSum += block;
        }
        for (int r = 0; r < size; ++r)
        {
            for (int c = 0; c < size; ++c)
            {
                const CycNum expected = (r == c) ? CycNum(1) : CycNum(0);
                if (blockSum(r, c) != expected)
                {
                    fail("idempotents do not sum to the identity on block " + std::to_string(i));
                }
            }
        }
    }

    // Canonical order: by the text form of the coordinate vector.
    std::sort(out.begin(), out.end(),
              [](const CentralIdempotent& a, const CentralIdempotent& b)
              {
                  std::string ka;
                  std::string kb;
                  for (int c = 0; c < a.centerCoords.rows(); ++c)
                  {
                      ka += a.centerCoords(c).toString() + "|";
                      kb += b.centerCoords(c).toString() + "|";
                  }
                  return ka < kb;
              });
    return out;
}

std::vector<long> wedderburnDegrees(const TAlgebra& alg, const CenterBasis& center,
                                    const std::vector<CentralIdempotent>& idempotents,
                                    int threads)
{
    const int s = alg.scheme.numClasses();
    std::vector<long> degrees;
    for (const CentralIdempotent& idem : idempotents)
    {
        long rank = 0;
        if (idem.rational)
        {
            std::vector<RatMatrix> blocks;
            for (int i = 0; i < s; ++i)
            {
                blocks.push_back(centerBlock(alg, center, idem.eCoordsRational, i));
            }
            // Right ideal T e: span of b * e over all basis elements b.
            std::vector<std::pair<std::pair<int, int>, RatVector> > products =
                parallelMap<std::pair<std::pair<int, int>, RatVector> >(
                    alg.basis.size(), threads,
                    [&](std::size_t j)
                    {
                        const TBasisElement& b = alg.basis[j];
                        const RatMatrix prod = b.mat * blocks[b.right];
                        return std::make_pair(std::make_pair(b.left, b.right),
                                              vectorizeRat(prod));
                    });
            std::map<std::pair<int, int>, SpanTracker<Rational> > trackers;
            for (const std::pair<std::pair<int, int>, RatVector>& entry : products)
            {
                auto it =
                    trackers.try_emplace(entry.first, static_cast<int>(entry.second.rows()))
                        .first;
                it->second.add(entry.second);
            }
            for (const auto& entry : trackers)
            {
                rank += entry.second.rank();
            }
        }
        else
        {
            std::vector<CycMatrix> blocks;
            for (int i = 0; i < s; ++i)
            {
                blocks.push_back(centerBlockCyc(alg, center, idem.eCoords, i));
            }
            std::vector<std::pair<std::pair<int, int>, CycVector> > products =
                parallelMap<std::pair<std::pair<int, int>, CycVector> >(
                    alg.basis.size(), threads,
                    [&](std::size_t j)
                    {
                        const TBasisElement& b = alg.basis[j];
                        CycMatrix bm = CycMatrix::Constant(b.mat.rows(), b.mat.cols(), CycNum(0));
                        for (int r = 0; r < b.mat.rows(); ++r)
                        {
                            for (int c = 0; c < b.mat.cols(); ++c)
                            {
                                bm(r, c) = CycNum(b.mat(r, c));
                            }
                        }
                        const CycMatrix prod = bm * blocks[b.right];
                        return std::make_pair(std::make_pair(b.left, b.right),
                                              vectorizeCyc(prod));
                    });
            std::map<std::pair<int, int>, SpanTracker<CycNum> > trackers;
            for (const std::pair<std::pair<int, int>, CycVector>& entry : products)
            {
                auto it =
                    trackers.try_emplace(entry.first, static_cast<int>(entry.second.rows()))
                        .first;
                it->second.add(entry.second);
            }
            for (const auto& entry : trackers)
            {
                rank += entry.second.rank();
            }
        }

        const std::optional<Integer> root = exactSqrt(Integer(rank));
        if (!root.has_value())
        {
            throw NonSquareRankError("ideal dimension " + std::to_string(rank)
                                     + " is not a perfect square");
        }
        degrees.push_back(root->convert_to<long>());
    }
    return degrees;
}

}  // namespace talg
