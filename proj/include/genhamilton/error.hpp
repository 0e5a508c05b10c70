#pragma once

#include <stdexcept>
#include <string>

namespace genhamilton {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: degree or dimension mismatch, element not in group, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Group enumeration (or a quotient/oracle enumeration) exceeded its cap.
class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotTransitive : public Error {
 public:
  using Error::Error;
};

class NoFaithfulConstituent : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle contradicts a criterion verdict.
class OracleInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace genhamilton
