#pragma once

#include <stdexcept>
#include <string>

namespace chepta {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad order, band wrap violation, parse error).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The matrix has determinant zero.
class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("singular matrix") {}
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

/// Float backend: a pivot fell below the configured tolerance.
class NearSingularPivot : public Error {
public:
    explicit NearSingularPivot(int index)
        : Error("near-singular pivot at " + std::to_string(index) + ", use exact backend"),
          index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

/// Division by an exact zero.
class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// An internal invariant did not hold (pole at t=0, zero divisor where none may occur, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A rational function exceeded the configured degree cap.
class DegreeCapExceeded : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

}  // namespace chepta
