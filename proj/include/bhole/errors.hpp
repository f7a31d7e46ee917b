#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace bhole {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based; 0 means "end of input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? "end of input: " + message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exact computation would exceed its size guard or work budget.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// A cycle or certificate does not check out against its graph.
class VerificationError : public Error {
 public:
  VerificationError(std::optional<std::size_t> pair_index, const std::string& message)
      : Error(pair_index ? "pair " + std::to_string(*pair_index) + ": " + message : message),
        pair_index_(pair_index) {}
  explicit VerificationError(const std::string& message) : VerificationError(std::nullopt, message) {}

  std::optional<std::size_t> pair_index() const noexcept { return pair_index_; }

 private:
  std::optional<std::size_t> pair_index_;
};

/// An internal guarantee failed. Always a caller bug or a library bug.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace bhole
