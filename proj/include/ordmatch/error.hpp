#pragma once

#include <stdexcept>
#include <string>

namespace ordmatch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Weight matrix is not symmetric, has a negative or non-finite entry, or a
// nonzero diagonal.
class MalformedInstance : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class EmptyPool : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordmatch
