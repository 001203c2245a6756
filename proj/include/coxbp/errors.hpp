#pragma once

#include <stdexcept>
#include <string>

namespace coxbp {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad input: unknown type, malformed word, mismatched systems.
class UsageError : public Error {
public:
  using Error::Error;
};

// A configured cap (length, rank, budget) was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

// Operation not available for this kind of system.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

// A constructive algorithm produced something that failed validation.
class ConstructionError : public Error {
public:
  using Error::Error;
};

// An internal invariant did not hold.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

} // namespace coxbp
