#pragma once

#include <stdexcept>
#include <string>

namespace uiozeta {

/// An input object violates one of its type invariants. The message names
/// the invariant and, where there is one, the first offending index.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its precondition (e.g. an extension
/// parameter that breaks monotonicity).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The request is well formed but refused because it is too large for an
/// exhaustive method.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uiozeta
