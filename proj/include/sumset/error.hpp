#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumset {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Fewer than two distinct elements.
class DegenerateSet : public Error {
  public:
    using Error::Error;
};

/// Set violates a precondition (not normalized, not strictly increasing, ...).
class InvalidSet : public Error {
  public:
    using Error::Error;
};

class NotRepresentable : public Error {
  public:
    using Error::Error;
};

class ModulusMismatch : public Error {
  public:
    using Error::Error;
};

class EmptySet : public Error {
  public:
    using Error::Error;
};

class NotGenerating : public Error {
  public:
    using Error::Error;
};

class TooSmall : public Error {
  public:
    using Error::Error;
};

class InvalidResidue : public Error {
  public:
    using Error::Error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

/// A set literal on the command line could not be parsed.
class MalformedSet : public Error {
  public:
    using Error::Error;
};

/// A computed fact contradicts a proven statement. Always a bug or a
/// counterexample; never recoverable.
class InternalError : public Error {
  public:
    using Error::Error;
};

/// A scan found a set whose failure status disagrees with the family
/// catalog. Carries the offending set.
class CatalogMismatch : public Error {
  public:
    CatalogMismatch(const std::string& what, std::vector<std::int64_t> witness_set)
        : Error(what), witness_set_(std::move(witness_set)) {}

    [[nodiscard]] const std::vector<std::int64_t>& witness_set() const noexcept { return witness_set_; }

  private:
    std::vector<std::int64_t> witness_set_;
};

}  // namespace sumset
