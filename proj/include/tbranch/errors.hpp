#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tbranch {

// Base class for every error the library reports to callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed names, inconsistent formats, missing parameters.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A generation or enumeration exceeded its configured size limit.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t produced)
      : Error(what), produced_(produced) {}
  std::size_t produced() const { return produced_; }

 private:
  std::size_t produced_;
};

// The requested (s1, s3) cannot produce integral tuples for some row.
class NormalizerMismatch : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure; indicates a bug rather than bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tbranch
