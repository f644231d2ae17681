#pragma once

#include <stdexcept>
#include <string>

namespace wakimoto {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (rational strings, chi documents, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (e.g. Omega_s with s <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A postcondition that must hold by construction failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace wakimoto
