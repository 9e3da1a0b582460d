#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ekc {

/// Malformed edge-list input. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An anchor that is already an edge, a self-loop, or references a missing vertex.
class InvalidAnchor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive search refused because the number of combinations exceeds the limit.
class EnumerationLimitExceeded : public std::runtime_error {
 public:
  EnumerationLimitExceeded(std::uint64_t limit, std::uint64_t required)
      : std::runtime_error("exhaustive search needs more than " + std::to_string(limit) +
                           " combinations (limit); at least " + std::to_string(required) +
                           " required"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

/// A solver run was cancelled because its wall-clock deadline passed.
class DeadlineExceeded : public std::runtime_error {
 public:
  DeadlineExceeded() : std::runtime_error("solver deadline exceeded") {}
};

}  // namespace ekc
