/**
 * Implementation of linear code arithmetic over small Galois fields.
 */
#include "talg/codes.hpp"

#include <algorithm>

#include "talg/errors.hpp"

namespace talg {

GaloisField::GaloisField(int q) : q_(q)
{
    if (q != 2 && q != 3 && q != 4)
    {
        throw Error("GaloisField supports q in {2, 3, 4}, got " + std::to_string(q));
    }
}

int GaloisField::order() const
{
    return this->q_;
}

int GaloisField::add(int a, int b) const
{
    if (this->q_ == 3)
    {
        return (a + b) % 3;
    }
    return a ^ b;  // characteristic 2: GF(2) directly, GF(4) componentwise
}

int GaloisField::neg(int a) const
{
    if (this->q_ == 3)
    {
        return (3 - a) % 3;
    }
    return a;
}

int GaloisField::sub(int a, int b) const
{
    return this->add(a, this->neg(b));
}

int GaloisField::mul(int a, int b) const
{
    if (this->q_ != 4)
    {
        return (a * b) % this->q_;
    }
    // GF(4) = {0, 1, omega=2, omega^2=3} with omega^2 = omega + 1.
    static const int table[4][4] = {{0, 0, 0, 0},
                                    {0, 1, 2, 3},
                                    {0, 2, 3, 1},
                                    {0, 3, 1, 2}};
    return table[a][b];
}

int GaloisField::inv(int a) const
{
    if (a == 0)
    {
        throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(this->q_) + ")");
    }
    for (int b = 1; b < this->q_; ++b)
    {
        if (this->mul(a, b) == 1)
        {
            return b;
        }
    }
    throw ConsistencyError("no inverse found");
}

int GaloisField::conj(int a) const
{
    if (this->q_ == 4)
    {
        return this->mul(a, a);
    }
    return a;
}

int codeLength(const LinearCode& code)
{
    if (code.generator.empty())
    {
        return 0;
    }
    return static_cast<int>(code.generator.front().size());
}

namespace {

/** In-place reduced echelon form over GF(q); returns the rank. */
int rrefGF(std::vector<std::vector<int> >& rows, const GaloisField& field)
{
    const int nrows = static_cast<int>(rows.size());
    const int ncols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col)
    {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
        {
            if (rows[r][col] != 0)
            {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
        {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        const int scale = field.inv(rows[rank][col]);
        for (int c = 0; c < ncols; ++c)
        {
            rows[rank][c] = field.mul(rows[rank][c], scale);
        }
        for (int r = 0; r < nrows; ++r)
        {
            if (r == rank || rows[r][col] == 0)
            {
                continue;
            }
            const int factor = rows[r][col];
            for (int c = 0; c < ncols; ++c)
            {
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
            }
        }
        ++rank;
    }
    rows.resize(rank, std::vector<int>(ncols, 0));
    return rank;
}

void validateEntries(const LinearCode& code)
{
    const int n = codeLength(code);
    for (const std::vector<int>& row : code.generator)
    {
        if (static_cast<int>(row.size()) != n)
        {
            throw DimensionMismatchError("generator rows have unequal lengths");
        }
        for (int v : row)
        {
            if (v < 0 || v >= code.q)
            {
                throw Error("generator entry " + std::to_string(v) + " outside GF("
                            + std::to_string(code.q) + ")");
            }
        }
    }
}

}  // namespace

int codeRank(const LinearCode& code)
{
    validateEntries(code);
    const GaloisField field(code.q);
    std::vector<std::vector<int> > rows = code.generator;
    return rrefGF(rows, field);
}

std::vector<std::vector<int> > canonicalGenerator(const LinearCode& code)
{
    validateEntries(code);
    const GaloisField field(code.q);
    std::vector<std::vector<int> > rows = code.generator;
    rrefGF(rows, field);
    return rows;
}

bool sameCode(const LinearCode& a, const LinearCode& b)
{
    if (a.q != b.q || codeLength(a) != codeLength(b))
    {
        return false;
    }
    return canonicalGenerator(a) == canonicalGenerator(b);
}

BivarPoly weightEnumerator(const LinearCode& code)
{
    validateEntries(code);
    const GaloisField field(code.q);
    const int n = codeLength(code);
    std::vector<std::vector<int> > rows = code.generator;
    const int k = rrefGF(rows, field);
    if (k > 24)
    {
        throw TooLargeError("weight enumerator over " + std::to_string(k)
                            + " information symbols exceeds the supported limit of 24");
    }

    std::vector<Integer> counts(n + 1, Integer(0));
    std::vector<int> message(k, 0);
    std::vector<int> word(n, 0);
    for (;;)
    {
        int weight = 0;
        std::fill(word.begin(), word.end(), 0);
        for (int r = 0; r < k; ++r)
        {
            if (message[r] == 0)
            {
                continue;
            }
            for (int c = 0; c < n; ++c)
            {
                word[c] = field.add(word[c], field.mul(message[r], rows[r][c]));
            }
        }
        for (int c = 0; c < n; ++c)
        {
            if (word[c] != 0)
            {
                ++weight;
            }
        }
        ++counts[weight];

        // Odometer step through GF(q)^k.
        int pos = 0;
        while (pos < k)
        {
            message[pos] += 1;
            if (message[pos] < code.q)
            {
                break;
            }
            message[pos] = 0;
            ++pos;
        }
        if (pos == k)
        {
            break;
        }
    }

    BivarPoly enumerator;
    for (int w = 0; w <= n; ++w)
    {
        if (counts[w] != 0)
        {
            enumerator.addTerm(n - w, w, CycNum(Rational(counts[w])));
        }
    }
    return enumerator;
}

LinearCode dualCode(const LinearCode& code, Duality duality)
{
    validateEntries(code);
    if (duality == Duality::Hermitian && code.q != 4)
    {
        throw Error("the Hermitian form requires GF(4)");
    }
    const GaloisField field(code.q);
    const int n = codeLength(code);
    std::vector<std::vector<int> > rows = code.generator;
    const int k = rrefGF(rows, field);

    // v is dual to the code iff sum_c g_c sigma(v_c) = 0 for each generator
    // row g, where sigma is the identity (Euclidean) or conjugation
    // (Hermitian).  Solve for sigma(v) as the kernel of the generator, then
    // apply sigma^-1 = sigma entrywise.
    std::vector<int> pivotOfRow(k, -1);
    std::vector<bool> isPivot(n, false);
    for (int r = 0, c = 0; r < k; ++r)
    {
        while (c < n && rows[r][c] == 0)
        {
            ++c;
        }
        pivotOfRow[r] = c;
        isPivot[c] = true;
    }

    LinearCode dual;
    dual.q = code.q;
    for (int freeCol = 0; freeCol < n; ++freeCol)
    {
        if (isPivot[freeCol])
        {
            continue;
        }
        std::vector<int> v(n, 0);
        v[freeCol] = 1;
        for (int r = 0; r < k; ++r)
        {
            if (pivotOfRow[r] < freeCol)
            {
                v[pivotOfRow[r]] = field.neg(rows[r][freeCol]);
            }
        }
        if (duality == Duality::Hermitian)
        {
            for (int c = 0; c < n; ++c)
            {
                v[c] = field.conj(v[c]);
            }
        }
        dual.generator.push_back(std::move(v));
    }
    return dual;
}

std::string classifyType(const LinearCode& code, Duality duality)
{
    if (!sameCode(code, dualCode(code, duality)))
    {
        return "none";
    }
    const BivarPoly enumerator = weightEnumerator(code);

    bool allMod4 = true;
    bool allEven = true;
    for (const auto& term : enumerator.terms)
    {
        const int weight = term.first.second;
        if (weight % 4 != 0)
        {
            allMod4 = false;
        }
        if (weight % 2 != 0)
        {
            allEven = false;
        }
    }

    if (code.q == 2 && duality == Duality::Euclidean)
    {
        if (allMod4)
        {
            return "II";
        }
        return allEven ? "I" : "none";
    }
    if (code.q == 3 && duality == Duality::Euclidean)
    {
        return "III";
    }
    if (code.q == 4 && duality == Duality::Hermitian)
    {
        return allEven ? "IV" : "none";
    }
    return "none";
}

bool checkEnumeratorInvariance(const BivarPoly& enumerator, const Mat2& transform)
{
    return actOn(enumerator, transform) == enumerator;
}

LinearCode builtinCode(const std::string& name)
{
    if (name == "repetition")
    {
        return LinearCode{2, {{1, 1}}};
    }
    if (name == "hamming8")
    {
        return LinearCode{2,
                          {{1, 0, 0, 0, 0, 1, 1, 1},
                           {0, 1, 0, 0, 1, 0, 1, 1},
                           {0, 0, 1, 0, 1, 1, 0, 1},
                           {0, 0, 0, 1, 1, 1, 1, 0}}};
    }
    if (name == "tetracode")
    {
        return LinearCode{3, {{1, 1, 1, 0}, {0, 1, 2, 1}}};
    }
    if (name == "hexacode")
    {
        return LinearCode{4,
                          {{1, 0, 0, 1, 2, 2}, {0, 1, 0, 2, 1, 2}, {0, 0, 1, 2, 2, 1}}};
    }
    throw ParseError("unknown code fixture '" + name
                     + "' (expected repetition, hamming8, tetracode or hexacode)");
}

const std::vector<std::string>& builtinCodeNames()
{
    static const std::vector<std::string> names{"repetition", "hamming8", "tetracode",
                                                "hexacode"};
    return names;
}

}  // namespace talg
