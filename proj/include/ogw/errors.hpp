#pragma once

#include <stdexcept>
#include <string>

namespace ogw {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad index, negative degree, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Two series with different truncation caps were combined.
class CapMismatch : public Error {
public:
    CapMismatch() : Error("series caps differ") {}
};

/// Inversion or logarithm of a series whose constant term is not admissible.
class NonUnitConstant : public Error {
public:
    explicit NonUnitConstant(const std::string& what) : Error(what) {}
};

/// A genus-0 integral was requested on an unstable moduli space.
class UnstableError : public Error {
public:
    using Error::Error;
};

/// A rational function of Q has a pole at Q = -1 and cannot be continued there.
class ContinuationPole : public Error {
public:
    ContinuationPole() : Error("denominator vanishes at Q = -1") {}
};

inline void require(bool cond, const char* what)
{
    if (!cond)
        throw PreconditionError(what);
}

} // namespace ogw
