#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pzx {

using SpiderId = std::uint32_t;

inline constexpr std::size_t kMaxParams = 64;

/// Base class for everything this library throws on bad input or bad state.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed circuit/diagram/expression input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A precondition of an operation was violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Commuting a parametric {0,pi}-image phase through a T-like spider would
/// produce a non-polarised phase; callers must route around such sites.
class Lemma1Violation : public DomainError {
public:
    using DomainError::DomainError;
};

/// Exact integer arithmetic left the 64-bit coefficient range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// An assignment does not cover every parameter in use.
class MissingParameter : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace pzx
