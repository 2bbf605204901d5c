/**
 * Error types shared by all modules.
 */
#ifndef TALG_ERRORS_HPP
#define TALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace talg {

/** Base class for every error raised by this library. */
struct Error : public std::runtime_error
{
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/** Malformed textual input (rationals, cyclotomic numbers, polynomials, JSON). */
struct ParseError : public Error
{
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/** Division by zero in exact arithmetic. */
struct DivisionByZeroError : public Error
{
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

/** Matrix/vector shapes do not match the operation. */
struct DimensionMismatchError : public Error
{
    explicit DimensionMismatchError(const std::string& msg) : Error(msg) {}
};

/** Group closure exceeded the element cap (non-terminating or mistyped generators). */
struct CapExceededError : public Error
{
    explicit CapExceededError(const std::string& msg) : Error(msg) {}
};

/** A generator matrix is singular. */
struct SingularGeneratorError : public Error
{
    explicit SingularGeneratorError(const std::string& msg) : Error(msg) {}
};

/** Basis closure still growing at the maximum allowed product depth. */
struct DepthExceededError : public Error
{
    explicit DepthExceededError(const std::string& msg) : Error(msg) {}
};

/** Neither the exact nor the numeric-then-verify path produced verified idempotents. */
struct SplittingError : public Error
{
    explicit SplittingError(const std::string& msg) : Error(msg) {}
};

/** rank{b·eps} is not a perfect square: the idempotent is not primitive. */
struct NonSquareRankError : public Error
{
    explicit NonSquareRankError(const std::string& msg) : Error(msg) {}
};

/** Request exceeds a hard enumeration guard (e.g. q^k codewords). */
struct TooLargeError : public Error
{
    explicit TooLargeError(const std::string& msg) : Error(msg) {}
};

/** Internal cross-check failed (signals a bug or a convention mismatch). */
struct ConsistencyError : public Error
{
    explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

}  // namespace talg

#endif  // TALG_ERRORS_HPP
