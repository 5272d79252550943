#pragma once

#include <stdexcept>
#include <string>

namespace transit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An instance violates a structural invariant. `field` names the offending
/// part (e.g. "alpha", "edges[3]") so front ends can point at it.
class InvalidInstance : public Error {
 public:
  InvalidInstance(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class InvalidAgent : public Error {
 public:
  using Error::Error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class NoPath : public Error {
 public:
  using Error::Error;
};

/// A budget mapping pair was combined over different budget bounds.
class BudgetMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured subset cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// A transformation's precondition does not hold for this input.
class Inapplicable : public Error {
 public:
  using Error::Error;
};

/// Wrong number of agents for a fixed-agent solver.
class AgentCount : public Error {
 public:
  using Error::Error;
};

}  // namespace transit
