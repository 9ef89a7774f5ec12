#pragma once

#include <stdexcept>
#include <string>

namespace glc {

/// Malformed arguments or inputs that violate an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A partition block that does not induce a connected subgraph.
class MultiCutError : public InputError {
 public:
  using InputError::InputError;
};

/// An expansion rule that cannot be applied to some vertex.
class RuleError : public InputError {
 public:
  RuleError(const std::string& what, int vertex, int level = -1)
      : InputError(what), vertex_(vertex), level_(level) {}

  int vertex() const { return vertex_; }
  /// Tower level (1-based) at which the rule failed, or -1 outside a tower.
  int level() const { return level_; }

 private:
  int vertex_;
  int level_;
};

/// A documented numeric precondition (e.g. N >= 4n+4) does not hold.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A cycle cannot be lifted through a fibre.
class LiftingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction (such as special rays) is impossible on the given tower.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact search would exceed the supported exhaustive bound.
class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check disagreed; signals a bug rather than bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace glc
