#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpa {

/// Base class for outcomes that are mathematical negatives (not an
/// automorphism, not a coordinate, nilpotency not certified). The CLI maps
/// these to exit status 1.
class MathNegative : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Misuse of an operation: wrong generator count, zero input to a degree
/// query, unverified decomposition, and the like.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegreeOfZero : public UsageError {
 public:
  DegreeOfZero() : UsageError("degree of the zero element is undefined") {}
};

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class UnverifiedDecomposition : public UsageError {
 public:
  UnverifiedDecomposition() : UsageError("tame decomposition is not verified") {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace fpa
