/**
 * Exact dense and sparse linear algebra over an arbitrary field scalar
 * (Rational or CycNum): reduced row echelon form, rank, kernel, linear
 * solve, and an incremental independence tracker used by the Terwilliger
 * basis closure.
 *
 * Dense matrices are Eigen matrices templated on the scalar; all elimination
 * loops are hand-rolled (no LU decompositions over exact types).  For
 * Rational rows the tracker keeps each stored row scaled to a primitive
 * integer vector and eliminates fraction-free, which bounds intermediate
 * growth; for general field scalars rows are normalized to a unit pivot.
 */
#ifndef TALG_LINALG_HPP
#define TALG_LINALG_HPP

#include <cstdint>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>
#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "talg/errors.hpp"
#include "talg/rational.hpp"

namespace talg {

typedef Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> RatMatrix;
typedef Eigen::Matrix<Rational, Eigen::Dynamic, 1> RatVector;
typedef Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> IntMatrix;

/** A sparse row: strictly increasing (index, nonzero value) pairs. */
template <typename T>
using SparseRow = std::vector<std::pair<int, T> >;

/**
 * Measure used for pivot selection between candidate rows: bit length of
 * numerator plus denominator for rationals, 0 for other scalars (first
 * candidate wins).
 */
inline std::size_t scalarSize(const Rational& x)
{
    const Integer num = boost::multiprecision::numerator(x);
    const Integer den = boost::multiprecision::denominator(x);
    std::size_t bits = 0;
    if (num != 0)
        bits += boost::multiprecision::msb(boost::multiprecision::abs(num)) + 1;
    bits += boost::multiprecision::msb(den) + 1;
    return bits;
}

template <typename T>
std::size_t scalarSize(const T&)
{
    return 0;
}

/**
 * Reduced row echelon form.
 *
 * Pivot choice within a column: among rows with a nonzero entry, the one
 * whose scalar has the smallest "size" (deterministic, moderates
 * coefficient growth).
 *
 * @param m Input matrix.
 * @returns (rref(m), rank).
 */
template <typename T>
std::pair<Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>, int>
rowEchelonForm(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& m)
{
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> a = m;
    const int nrows = static_cast<int>(a.rows());
    const int ncols = static_cast<int>(a.cols());
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col)
    {
        // Select the pivot row.
        int pivot = -1;
        std::size_t best = 0;
        for (int row = rank; row < nrows; ++row)
        {
            if (a(row, col) != T(0))
            {
                std::size_t size = scalarSize(a(row, col));
                if (pivot < 0 || size < best)
                {
                    pivot = row;
                    best = size;
                }
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            a.row(pivot).swap(a.row(rank));

        // Normalize the pivot row and clear the column everywhere else.
        const T inv = T(1) / a(rank, col);
        for (int j = col; j < ncols; ++j)
            a(rank, j) = a(rank, j) * inv;
        for (int row = 0; row < nrows; ++row)
        {
            if (row == rank || a(row, col) == T(0))
                continue;
            const T factor = a(row, col);
            for (int j = col; j < ncols; ++j)
                a(row, j) = a(row, j) - factor * a(rank, j);
        }
        rank++;
    }
    return std::make_pair(a, rank);
}

/** Rank of a dense matrix over its field. */
template <typename T>
int rank(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& m)
{
    return rowEchelonForm<T>(m).second;
}

/**
 * Basis of the right kernel {v : m v = 0}.
 *
 * @param m Input matrix.
 * @returns cols - rank independent vectors, in the canonical RREF
 *          parametrization (one per free column, free coordinate = 1).
 */
template <typename T>
std::vector<Eigen::Matrix<T, Eigen::Dynamic, 1> >
kernelBasis(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& m)
{
    typedef Eigen::Matrix<T, Eigen::Dynamic, 1> Vector;
    const int ncols = static_cast<int>(m.cols());
    auto [r, rk] = rowEchelonForm<T>(m);

    // Locate pivot columns.
    std::vector<int> pivotCol(rk, -1);
    std::vector<bool> isPivot(ncols, false);
    for (int row = 0, col = 0; row < rk; ++row)
    {
        while (col < ncols && r(row, col) == T(0))
            col++;
        pivotCol[row] = col;
        isPivot[col] = true;
    }

    std::vector<Vector> basis;
    for (int col = 0; col < ncols; ++col)
    {
        if (isPivot[col])
            continue;
        Vector v = Vector::Constant(ncols, T(0));
        v(col) = T(1);
        for (int row = 0; row < rk; ++row)
        {
            if (pivotCol[row] < col)
                v(pivotCol[row]) = -r(row, col);
        }
        basis.push_back(v);
    }
    return basis;
}

/**
 * Solve m x = b exactly.
 *
 * @param m Coefficient matrix.
 * @param b Right-hand side.
 * @returns A particular solution (free variables set to zero), or
 *          std::nullopt when the system is inconsistent.
 */
template <typename T>
std::optional<Eigen::Matrix<T, Eigen::Dynamic, 1> >
solveLinear(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& m,
            const Eigen::Matrix<T, Eigen::Dynamic, 1>& b)
{
    typedef Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> Matrix;
    typedef Eigen::Matrix<T, Eigen::Dynamic, 1> Vector;
    if (m.rows() != b.rows())
        throw DimensionMismatchError("solveLinear: matrix and vector row counts differ");
    const int nrows = static_cast<int>(m.rows());
    const int ncols = static_cast<int>(m.cols());

    Matrix aug(nrows, ncols + 1);
    aug.leftCols(ncols) = m;
    aug.col(ncols) = b;
    auto [r, rk] = rowEchelonForm<T>(aug);

    Vector x = Vector::Constant(ncols, T(0));
    for (int row = 0, col = 0; row < rk; ++row)
    {
        while (col < ncols + 1 && r(row, col) == T(0))
            col++;
        if (col == ncols)
            return std::nullopt;    // pivot in the augmented column
        if (col > ncols)
            break;
        x(col) = r(row, ncols);
    }
    return x;
}

/**
 * Incremental span tracker in reduced echelon form.
 *
 * Stored rows are pairwise pivot-disjoint and fully back-eliminated; the
 * final rank is independent of insertion order.  Rational rows are kept as
 * primitive integer vectors and combined fraction-free.
 */
template <typename T>
class SpanTracker
{
    private:
        int ambient_;
        std::vector<SparseRow<T> > rows_;     // sorted by pivot column
        std::vector<int> pivots_;             // pivot column of rows_[i]

        /** Scale a row to canonical form (primitive integers for Rational). */
        static void normalize(SparseRow<T>& v)
        {
            if (v.empty())
                return;
            if constexpr (std::is_same_v<T, Rational>)
            {
                Integer g = 0;
                Integer l = 1;
                for (const auto& e : v)
                {
                    g = boost::multiprecision::gcd(
                        g, boost::multiprecision::abs(boost::multiprecision::numerator(e.second)));
                    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(e.second));
                }
                Rational scale(l, g == 0 ? Integer(1) : g);
                if (v.front().second < 0)
                    scale = -scale;
                for (auto& e : v)
                    e.second *= scale;
            }
            else
            {
                const T inv = T(1) / v.front().second;
                for (auto& e : v)
                    e.second = e.second * inv;
            }
        }

        /** v <- a*v + b*w, merged sparse combination. */
        static SparseRow<T> combine(const T& a, const SparseRow<T>& v,
                                    const T& b, const SparseRow<T>& w)
        {
            SparseRow<T> out;
            out.reserve(v.size() + w.size());
            std::size_t i = 0, j = 0;
            while (i < v.size() || j < w.size())
            {
                if (j == w.size() || (i < v.size() && v[i].first < w[j].first))
                {
                    T val = a * v[i].second;
                    if (val != T(0))
                        out.emplace_back(v[i].first, val);
                    i++;
                }
                else if (i == v.size() || w[j].first < v[i].first)
                {
                    T val = b * w[j].second;
                    if (val != T(0))
                        out.emplace_back(w[j].first, val);
                    j++;
                }
                else
                {
                    T val = a * v[i].second + b * w[j].second;
                    if (val != T(0))
                        out.emplace_back(v[i].first, val);
                    i++;
                    j++;
                }
            }
            return out;
        }

        /** Eliminate all stored pivots from v (no insertion). */
        void reduce(SparseRow<T>& v) const
        {
            for (std::size_t r = 0; r < rows_.size() && !v.empty(); ++r)
            {
                if (pivots_[r] < v.front().first)
                    continue;
                // Find the pivot coordinate in v, if any.
                const int p = pivots_[r];
                auto it = std::lower_bound(
                    v.begin(), v.end(), p,
                    [](const std::pair<int, T>& e, int col) { return e.first < col; });
                if (it == v.end() || it->first != p)
                    continue;
                const T vval = it->second;
                const T pval = rows_[r].front().second;
                if constexpr (std::is_same_v<T, Rational>)
                    v = combine(pval, v, -vval, rows_[r]);      // fraction-free
                else
                    v = combine(T(1), v, -(vval / pval), rows_[r]);
            }
        }

    public:
        explicit SpanTracker(int ambientDim) : ambient_(ambientDim) {}

        int ambientDim() const { return this->ambient_; }
        int rank() const { return static_cast<int>(this->rows_.size()); }

        /**
         * Reduce v against the current span and insert the remainder if
         * nonzero, maintaining reduced echelon form.
         *
         * @param v Sparse vector of length ambientDim.
         * @returns True iff v was outside the span (rank grew).
         * @throws DimensionMismatchError on an out-of-range index.
         */
        bool add(SparseRow<T> v)
        {
            if (!v.empty() && (v.front().first < 0 || v.back().first >= this->ambient_))
                throw DimensionMismatchError("SpanTracker::add: index out of range");
            this->reduce(v);
            if (v.empty())
                return false;
            normalize(v);

            // Back-eliminate the new pivot from the stored rows, then insert
            // keeping rows sorted by pivot column.
            const int p = v.front().first;
            for (std::size_t r = 0; r < this->rows_.size(); ++r)
            {
                auto it = std::lower_bound(
                    this->rows_[r].begin(), this->rows_[r].end(), p,
                    [](const std::pair<int, T>& e, int col) { return e.first < col; });
                if (it == this->rows_[r].end() || it->first != p)
                    continue;
                const T rval = it->second;
                const T pval = v.front().second;
                if constexpr (std::is_same_v<T, Rational>)
                {
                    this->rows_[r] = combine(pval, this->rows_[r], -rval, v);
                    normalize(this->rows_[r]);
                }
                else
                {
                    this->rows_[r] = combine(T(1), this->rows_[r], -(rval / pval), v);
                }
            }
            auto pos = std::lower_bound(this->pivots_.begin(), this->pivots_.end(), p);
            const std::size_t idx = pos - this->pivots_.begin();
            this->pivots_.insert(pos, p);
            this->rows_.insert(this->rows_.begin() + idx, std::move(v));
            return true;
        }

        /** Dense-vector convenience wrapper around add(). */
        bool add(const Eigen::Matrix<T, Eigen::Dynamic, 1>& v)
        {
            if (static_cast<int>(v.rows()) != this->ambient_)
                throw DimensionMismatchError("SpanTracker::add: wrong vector length");
            SparseRow<T> s;
            for (int i = 0; i < this->ambient_; ++i)
            {
                if (v(i) != T(0))
                    s.emplace_back(i, v(i));
            }
            return this->add(std::move(s));
        }

        /** True iff v lies in the current span. */
        bool contains(SparseRow<T> v) const
        {
            this->reduce(v);
            return v.empty();
        }

        /** Stored rows stacked into a dense rank x ambientDim matrix. */
        Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> toDenseMatrix() const
        {
            Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> m =
                Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>::Constant(
                    this->rows_.size(), this->ambient_, T(0));
            for (std::size_t r = 0; r < this->rows_.size(); ++r)
            {
                for (const auto& e : this->rows_[r])
                    m(r, e.first) = e.second;
            }
            return m;
        }
};

/**
 * Minimal sparse matrix (sorted sparse rows), converting losslessly to and
 * from the dense Eigen form.  Used for adjacency matrices, dual idempotents
 * and full-size basis matrices.
 */
template <typename T>
class SparseFieldMatrix
{
    private:
        int nrows_;
        int ncols_;
        std::vector<SparseRow<T> > rows_;

    public:
        SparseFieldMatrix(int nrows, int ncols)
            : nrows_(nrows), ncols_(ncols), rows_(nrows)
        {
        }

        int rows() const { return this->nrows_; }
        int cols() const { return this->ncols_; }

        /** Set entry (overwrites; value 0 removes). Indices must be valid. */
        void set(int r, int c, const T& value)
        {
            if (r < 0 || r >= this->nrows_ || c < 0 || c >= this->ncols_)
                throw DimensionMismatchError("SparseFieldMatrix::set: index out of range");
            SparseRow<T>& row = this->rows_[r];
            auto it = std::lower_bound(
                row.begin(), row.end(), c,
                [](const std::pair<int, T>& e, int col) { return e.first < col; });
            if (it != row.end() && it->first == c)
            {
                if (value == T(0))
                    row.erase(it);
                else
                    it->second = value;
            }
            else if (value != T(0))
            {
                row.insert(it, std::make_pair(c, value));
            }
        }

        T get(int r, int c) const
        {
            const SparseRow<T>& row = this->rows_[r];
            auto it = std::lower_bound(
                row.begin(), row.end(), c,
                [](const std::pair<int, T>& e, int col) { return e.first < col; });
            if (it != row.end() && it->first == c)
                return it->second;
            return T(0);
        }

        const SparseRow<T>& row(int r) const { return this->rows_[r]; }

        Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> toDense() const
        {
            Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> m =
                Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>::Constant(
                    this->nrows_, this->ncols_, T(0));
            for (int r = 0; r < this->nrows_; ++r)
            {
                for (const auto& e : this->rows_[r])
                    m(r, e.first) = e.second;
            }
            return m;
        }

        static SparseFieldMatrix<T>
        fromDense(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& m)
        {
            SparseFieldMatrix<T> s(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
            for (int r = 0; r < m.rows(); ++r)
            {
                for (int c = 0; c < m.cols(); ++c)
                {
                    if (m(r, c) != T(0))
                        s.rows_[r].emplace_back(c, m(r, c));
                }
            }
            return s;
        }

        bool operator==(const SparseFieldMatrix<T>& other) const
        {
            return this->nrows_ == other.nrows_ && this->ncols_ == other.ncols_
                   && this->rows_ == other.rows_;
        }
};

}  // namespace talg

#endif  // TALG_LINALG_HPP
