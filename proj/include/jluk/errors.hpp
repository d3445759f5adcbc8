#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jluk {

/// Raised when input text is not in the formula/term/script grammar.
/// Carries the byte offset of the failure and the tokens that would
/// have been accepted there.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t offset,
             std::vector<std::string> expected = {})
      : std::runtime_error(std::move(message)), offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Raised when a proof script is structurally malformed: indices are not
/// contiguous, a rule references a line that is not strictly earlier, a
/// rule does not belong to the script's calculus, and so on. Structural
/// problems are distinct from Invalid verdicts: a structurally broken
/// script is rejected before checking starts.
class StructureError : public std::runtime_error {
public:
  explicit StructureError(const std::string& message)
      : std::runtime_error(message) {}
};

/// Raised when an operation's precondition does not hold (invalid input
/// proof, missing binding, wrong calculus, ...).
class KernelError : public std::runtime_error {
public:
  explicit KernelError(const std::string& message)
      : std::runtime_error(message) {}
};

} // namespace jluk
