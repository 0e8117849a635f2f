#pragma once

#include <stdexcept>
#include <string>

namespace dirichlet {

// All library failures derive from Error so callers (the CLI in particular)
// can map them onto structured report errors in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A multiplicative rule set or a prime basis does not cover what is needed.
class CoverageError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Input is identically zero (or all samples undefined).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Input lacks required multiplicative structure.
class StructureError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// A construction failed its own post-condition; indicates a bug.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Bad command-line or experiment parameters.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace dirichlet
