#pragma once

#include <stdexcept>
#include <string>

namespace macut {

/// Raised when an input object breaks one of its structural invariants.
/// `invariant()` names the rule that failed (e.g. "simplicity").
class InvariantError : public std::invalid_argument {
 public:
  InvariantError(std::string invariant, const std::string& what)
      : std::invalid_argument(invariant + ": " + what), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// A computation would exceed a configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace macut
