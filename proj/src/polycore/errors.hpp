#pragma once

#include <stdexcept>
#include <string>

namespace logvec {

/// Input violates a mathematical precondition (not reduced, not smooth,
/// shared component, ...). The message names the failed check.
class HypothesisError : public std::runtime_error {
public:
  HypothesisError(std::string check, const std::string& detail)
      : std::runtime_error(check + ": " + detail), check_(std::move(check)), detail_(detail) {}
  const std::string& check() const { return check_; }
  const std::string& detail() const { return detail_; }

private:
  std::string check_;
  std::string detail_;
};

/// Two computations that must agree did not.
class InconsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A randomized search ran out of attempts.
class RetryExhaustedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace logvec
