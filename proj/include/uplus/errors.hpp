#pragma once

#include <stdexcept>
#include <string>

namespace uplus {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation that is only defined in positive degree received the empty word.
class EmptyWordError : public Error {
 public:
  using Error::Error;
};

class ZeroElementError : public Error {
 public:
  using Error::Error;
};

class NotInvariantError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Raised when the star-class graph fails to 2-color. Never repaired.
class NotBipartiteError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class GeneratorOrbitInfiniteError : public Error {
 public:
  using Error::Error;
};

class FusionIncompatibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace uplus
