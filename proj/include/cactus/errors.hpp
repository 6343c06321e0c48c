#pragma once

#include <stdexcept>
#include <string>

namespace cactus {

// Raised when an operation is called outside its precondition.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when an internal invariant that should hold for valid inputs fails.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cactus
