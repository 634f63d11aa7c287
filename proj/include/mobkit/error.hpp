#pragma once

#include <stdexcept>
#include <string>

namespace mobkit {

// A violated precondition on caller-supplied input (bad prime, invalid
// poset, missing divisor value, ...). The CLI maps this to exit code 1.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A cap on problem size was exceeded.
class CapError : public DomainError {
public:
  using DomainError::DomainError;
};

// Something that theory guarantees did not happen. Never caught internally.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace mobkit
