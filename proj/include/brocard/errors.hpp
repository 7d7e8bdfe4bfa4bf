#pragma once

#include <stdexcept>
#include <string>

namespace brocard {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's domain (bad argument, empty range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured memory guard (bit budget,
/// exact-factorial ceiling, scan ceiling).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Raised by factor_structure when n is not a solution.
class NotASolutionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// File system failures; the message carries the offending path.
class StorageError : public Error {
 public:
  using Error::Error;
};

class CheckpointError : public Error {
 public:
  enum class Kind { kVersion, kChecksum, kPoolMismatch, kFormat };

  CheckpointError(Kind kind, const std::string& what)
      : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace brocard
