#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eulext {

/// Typed failure categories surfaced by the extension pipeline.
enum class ErrorKind {
  kPrecondition,        // caller violated an operation's precondition
  kHypothesisViolated,  // strict mode refused: instance outside the supported hypothesis class
  kBudgetExhausted,     // marking consumed m - b edges but odd vertices remain
  kInfeasiblePlan,      // edge budget cannot be split into the required walks
  kNoCandidate,         // repair found no admissible replacement vertex
  kRetriesExhausted,    // Las Vegas loop hit its retry cap
  kDegreeOverflow,      // accumulated graph reached degree >= n/2
  kNotEulerian,
  kInstanceTooLarge,
  kGeneration,
};

std::string_view to_string(ErrorKind kind) noexcept;

class ExtensionError : public std::runtime_error {
 public:
  ExtensionError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised for malformed graph descriptions (self-loops, duplicates, bad ids).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace eulext
