#pragma once

#include <stdexcept>
#include <string>

namespace hookdet {

// Shared error taxonomy. Every guard failure names the limit it hit so CLI
// exit codes can distinguish guard aborts (3) from bad input (2).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

// Order guard of a determinant engine tripped.
class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class MissingVariable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class CyclicGraph : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// Path-system enumeration refused: the candidate estimate exceeded its bound.
class ExplosionGuard : public Error {
 public:
  using Error::Error;
};

}  // namespace hookdet
