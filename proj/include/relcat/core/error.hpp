#pragma once

#include <stdexcept>
#include <string>

namespace relcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction would exceed the configured object/morphism caps.
class QuotaError : public Error {
 public:
  using Error::Error;
};

/// Input violates a precondition (bad ids, wrong shapes, non-functorial data).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace relcat
