#pragma once

#include <stdexcept>
#include <string>

namespace flab {

// Malformed arguments: out-of-range residues, wrong arity, bad syntax.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition of an operation does not hold for otherwise
// well-formed input (e.g. asking for a D-set of an r-dependent sequence).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// Desk-scale limits: weight caps, order caps, search-length caps.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flab
