#pragma once

#include <stdexcept>
#include <string>

namespace cpl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class OrderGuardExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidElementId : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotNormalSubset : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class NotSupersolvable : public Error {
 public:
  using Error::Error;
};

class NotPGroup : public Error {
 public:
  using Error::Error;
};

class TrivialGroup : public Error {
 public:
  using Error::Error;
};

class TooManyClasses : public Error {
 public:
  using Error::Error;
};

// Syntax error in the group-spec grammar; carries the offset of the bad token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

class IngestError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpl
