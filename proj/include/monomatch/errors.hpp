#pragma once

#include <stdexcept>
#include <string>

namespace monomatch {

/// Malformed or out-of-range input (bad index, self-loop, odd n, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Colored-graph text that does not follow the file format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of a lemma-level operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Whether a lemma-level operation validates its hypotheses or takes them on trust. kAssume
/// lets tests feed a counter-hypothesis input straight into a conclusion check.
enum class Hypotheses { kCheck, kAssume };

/// Reachable only if a proven lemma were false on the given input.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monomatch
