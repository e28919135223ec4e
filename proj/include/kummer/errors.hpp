#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

// Bad caller input: non-prime exponent, malformed coefficient list, ...
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A self-check failed. These are bug reports, never expected at runtime.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}

}  // namespace kummer
