#pragma once

#include <stdexcept>
#include <string>

namespace eqhirz {

// A mathematical precondition of an operation does not hold for the given
// input (rank mismatch, non-exact division, non-pointed cone, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed structured input (job documents, expression text).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eqhirz
