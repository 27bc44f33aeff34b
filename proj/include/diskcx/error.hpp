#pragma once

#include <stdexcept>
#include <string>

namespace diskcx {

/// Input violates a documented precondition (bad interval, trivial word,
/// hypothesis violation). The CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::string precondition, const std::string& what)
      : std::invalid_argument(what), precondition_(std::move(precondition)) {}

  const std::string& precondition() const noexcept { return precondition_; }

 private:
  std::string precondition_;
};

/// An internal consistency check failed; indicates a bug in the model.
/// The CLI maps this to exit code 1.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace diskcx
