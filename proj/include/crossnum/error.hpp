#pragma once

#include <stdexcept>
#include <string>

namespace crossnum {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments or files.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Operation called outside its documented precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Degree-2 suppression would create a loop or a parallel edge.
class NonSimpleResult : public Error {
public:
  using Error::Error;
};

} // namespace crossnum
