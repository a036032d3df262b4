#pragma once

#include <stdexcept>
#include <string>

namespace hombrace {

// Malformed or inconsistent input: bad shapes, mixed fields, unparsable text.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates a mathematical precondition
// (e.g. a map that is not an O-operator, a singular twist where an inverse is needed).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace hombrace
