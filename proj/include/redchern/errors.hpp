#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace redchern {

// Caller violated a precondition (bad rank, mismatched tables, unknown tag, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A symmetric-function routine received a polynomial that is not symmetric.
// The witness permutation maps variable i to variable witness[i].
class NotSymmetricError : public UsageError {
 public:
  NotSymmetricError(const std::string& what, std::vector<int> witness)
      : UsageError(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

// An identity that must hold by construction did not hold.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace redchern
