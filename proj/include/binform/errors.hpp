#pragma once

#include <stdexcept>
#include <string>

namespace binform {

/// Input violates an operation's precondition (bad degree, inadmissible type,
/// mismatched ambient dimensions, malformed serialized data).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree by theorem disagreed. Never expected on
/// valid input; surfaced so it can be investigated rather than papered over.
class InternalInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A randomized construction ran out of draws. Indicates an unlucky or
/// degenerate sample, not a mathematical failure.
class BudgetExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace binform
