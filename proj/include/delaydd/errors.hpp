#pragma once

#include <stdexcept>
#include <string>

namespace delaydd {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// tau is not an integer multiple of dt.
class NonIntegerDelay : public Error {
public:
    using Error::Error;
};

/// T is not an integer multiple of dt.
class NonIntegerHorizon : public Error {
public:
    using Error::Error;
};

/// A pivot magnitude underflowed during tridiagonal elimination.
class ZeroPivot : public Error {
public:
    using Error::Error;
};

/// Two traces of different lengths were combined.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Partition interfaces miss grid nodes, or grid and problem disagree.
class NonConforming : public Error {
public:
    using Error::Error;
};

/// Schwarz overlap leaves a subdomain with non-positive width.
class OverlapTooLarge : public Error {
public:
    using Error::Error;
};

/// Laplace variable outside the right half-plane.
class BranchFailure : public Error {
public:
    using Error::Error;
};

/// Malformed experiment config document.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

/// Well-formed config with an out-of-range or inconsistent field.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure while writing results.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace delaydd
