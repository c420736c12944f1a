#pragma once

#include <stdexcept>
#include <string>

namespace hwdirac {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ZeroRootError : public Error {
 public:
  ZeroRootError() : Error("reflection in the zero vector is undefined") {}
};

class UnknownLabelError : public Error {
 public:
  explicit UnknownLabelError(const std::string& label) : Error("unknown Weyl generator: " + label) {}
};

class InvalidWeightError : public Error {
 public:
  using Error::Error;
};

/// Raised when two computations that must agree do not. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class IterationBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnreachableCase : public Error {
 public:
  using Error::Error;
};

}  // namespace hwdirac
