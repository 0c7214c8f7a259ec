#pragma once

#include <stdexcept>
#include <string>

namespace twoloop {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments: non-coprime cable parameters, zero substitution power,
// division by the zero polynomial, malformed builtin names.
class InvalidParamsError : public Error {
public:
    using Error::Error;
};

// Violated algebraic consistency: a quantity that is provably a polynomial
// (or provably regular at t = 1) failed to be one. These indicate either a
// malformed input record or an internal bug, never a recoverable condition.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Exact division left a nonzero remainder.
class NotDivisibleError : public ConsistencyError {
public:
    using ConsistencyError::ConsistencyError;
};

// A rational function expected to be a polynomial has a nontrivial denominator.
class NotPolynomialError : public ConsistencyError {
public:
    using ConsistencyError::ConsistencyError;
};

// Evaluation of a rational function at t = 1 hit a pole after reduction.
class PoleError : public ConsistencyError {
public:
    using ConsistencyError::ConsistencyError;
};

// Degree of the zero polynomial requested.
class ZeroPolynomialError : public Error {
public:
    using Error::Error;
};

// Fundamental-domain extraction found a half-integer exponent.
class HalfIntegerExponentError : public Error {
public:
    using Error::Error;
};

// Record text that does not match the grammar.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Well-formed record text whose content violates a record invariant.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& invariant)
        : Error("record invalid: " + invariant), invariant_(invariant) {}

    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

// Unknown builtin record name.
class UnknownBuiltinError : public Error {
public:
    using Error::Error;
};

}  // namespace twoloop
