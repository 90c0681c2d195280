#pragma once

#include <stdexcept>
#include <string>

namespace rindler {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched or unsupported matrix/subsystem dimensions.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Input fails the density-matrix contract (Hermiticity, trace, positivity).
class NotAStateError : public Error {
 public:
  explicit NotAStateError(const std::string& what) : Error(what) {}
};

/// Scalar parameter outside its documented domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Matrix does not have the structural shape an operation requires (e.g. X-shape).
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

}  // namespace rindler
