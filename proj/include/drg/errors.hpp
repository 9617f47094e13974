#pragma once

#include <stdexcept>
#include <string>

namespace drg {

/// Base of every error the library raises. `kind()` is a stable
/// machine-readable tag (e.g. "InvalidArray") used in JSON reports and by
/// the CLI to choose an exit code.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Malformed or infeasible user input: bad array text, invariant violations,
/// bad constructor parameters, unreadable files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical property of the input does not hold (non-integral shell
/// sizes, multiplicities, inconsistent geometry, missing cover, ...).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Internal state that contradicts a theorem or an invariant the code relies
/// on. Reaching one of these is a bug or a counterexample.
class AnomalyError : public Error {
 public:
  using Error::Error;
};

}  // namespace drg
