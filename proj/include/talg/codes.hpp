/**
 * Linear codes over GF(2), GF(3) and GF(4): weight enumerators, duals with
 * respect to the Euclidean or Hermitian inner product, classification into
 * the classical self-dual types I-IV, and the invariance of enumerators
 * under the associated 2x2 transformation groups.
 *
 * GF(4) elements are encoded as integers 0..3 with 2 = omega and
 * 3 = omega^2 = omega + 1; field conjugation is squaring.
 */
#ifndef TALG_CODES_HPP
#define TALG_CODES_HPP

#include <string>
#include <vector>

#include "talg/invariants.hpp"

namespace talg {

/** A linear code given by generator rows (entries 0..q-1). */
struct LinearCode
{
    int q;
    std::vector<std::vector<int> > generator;
};

enum class Duality
{
    Euclidean,
    Hermitian
};

/** Arithmetic of GF(q) for q in {2, 3, 4}. */
class GaloisField
{
public:
    explicit GaloisField(int q);

    int order() const;
    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    /** Field conjugation: identity for GF(2), GF(3); squaring for GF(4). */
    int conj(int a) const;

private:
    int q_;
};

int codeLength(const LinearCode& code);

/** Rank of the generator matrix over GF(q) (the code dimension). */
int codeRank(const LinearCode& code);

/** Canonical reduced-echelon generator rows (zero rows dropped). */
std::vector<std::vector<int> > canonicalGenerator(const LinearCode& code);

/** Two codes are equal iff their canonical generators coincide. */
bool sameCode(const LinearCode& a, const LinearCode& b);

/**
 * Weight enumerator W(x, y) = sum over codewords of x^(n-wt) y^wt,
 * enumerated exactly over the q^k codewords.
 *
 * @throws TooLargeError when the code dimension exceeds 24.
 */
BivarPoly weightEnumerator(const LinearCode& code);

/**
 * The dual code under the chosen inner product.  The Hermitian form
 * <u, v> = sum u_i conj(v_i) requires q = 4.
 */
LinearCode dualCode(const LinearCode& code, Duality duality);

/**
 * Classifies a code as "I", "II", "III", "IV" or "none", checking
 * self-duality under the given form and the weight conditions:
 * Type II needs q=2 and all weights divisible by 4; Type I is a binary
 * Euclidean self-dual code that is not Type II; Type III needs q=3; Type
 * IV needs q=4 with the Hermitian form.
 */
std::string classifyType(const LinearCode& code, Duality duality);

/** True when the enumerator is fixed by the substitution matrix. */
bool checkEnumeratorInvariance(const BivarPoly& enumerator, const Mat2& transform);

/**
 * Built-in self-dual fixtures: "repetition" (binary [2,1]), "hamming8"
 * (binary [8,4] extended Hamming), "tetracode" (ternary [4,2]) and
 * "hexacode" (quaternary [6,3], Hermitian self-dual).
 */
LinearCode builtinCode(const std::string& name);

/** The built-in fixture names, in order. */
const std::vector<std::string>& builtinCodeNames();

}  // namespace talg

#endif  // TALG_CODES_HPP
