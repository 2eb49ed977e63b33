#pragma once

#include <stdexcept>
#include <string>

namespace ncalg {

struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct NonTerminatingError : Error {
    explicit NonTerminatingError(const std::string &msg) : Error(msg) {}
};

struct NegativeExponentError : Error {
    explicit NegativeExponentError(const std::string &msg) : Error(msg) {}
};

struct ExponentOverflowError : Error {
    explicit ExponentOverflowError(const std::string &msg) : Error(msg) {}
};

struct UnknownGeneratorError : Error {
    explicit UnknownGeneratorError(const std::string &msg) : Error(msg) {}
};

struct MissingInverseImageError : Error {
    explicit MissingInverseImageError(const std::string &msg) : Error(msg) {}
};

struct MixedCentersError : Error {
    explicit MixedCentersError(const std::string &msg) : Error(msg) {}
};

struct BoundExceededError : Error {
    explicit BoundExceededError(const std::string &msg) : Error(msg) {}
};

struct MatrixTooLargeError : Error {
    explicit MatrixTooLargeError(const std::string &msg) : Error(msg) {}
};

struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string &msg) : Error(msg) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string &msg) : Error(msg) {}
};

// Parse failures carry the byte offset of the offending token.
struct ParseError : Error {
    size_t position;
    ParseError(const std::string &msg, size_t pos) : Error(msg), position(pos) {}
};

} // namespace ncalg
