#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asymcont {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the operation's domain (bad probability, r > 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The matrix side of a requested construction exceeds the configured cap.
class SizeLimitError : public Error {
 public:
  SizeLimitError(std::size_t requested, std::size_t cap)
      : Error("matrix side " + std::to_string(requested) + " exceeds size cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Raised when a file cannot be read or parsed.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace asymcont
