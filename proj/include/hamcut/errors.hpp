#pragma once

#include <stdexcept>
#include <string>

namespace hamcut {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroCovector : Error {
    ZeroCovector() : Error("zero covector: a hyperplane requires f != 0") {}
};

struct ZeroVector : Error {
    ZeroVector() : Error("zero vector: a direction requires e != 0") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) +
                ", got " + std::to_string(got)) {}
};

struct NotExactInput : Error {
    NotExactInput() : Error("operation requires exact rational scalars") {}
};

struct WrongDimension : Error {
    explicit WrongDimension(const std::string& msg) : Error("wrong dimension: " + msg) {}
};

struct WrongMode : Error {
    explicit WrongMode(const std::string& msg) : Error("wrong mode: " + msg) {}
};

struct Infeasible : Error {
    Infeasible() : Error("infeasible: interval stack has empty intersection") {}
};

struct NonUnitLeadingTerm : Error {
    NonUnitLeadingTerm() : Error("total class must have leading term w_0 = 1") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

}  // namespace hamcut
