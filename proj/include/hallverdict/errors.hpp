#pragma once

#include <stdexcept>
#include <string>

namespace hallverdict {

// Base class for every error this library reports deliberately.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A factorization (or enumeration) budget was exhausted; the caller must
// supply smaller parameters.
struct CapExceededError : Error {
  explicit CapExceededError(const std::string& what) : Error(what) {}
};

struct InvalidInputError : Error {
  explicit InvalidInputError(const std::string& what) : Error(what) {}
};

// Group descriptor parameters do not denote a simple group.
struct NotSimpleError : Error {
  explicit NotSimpleError(const std::string& what) : Error(what) {}
};

// A table lookup was attempted outside the hypotheses of the table's lemma.
struct HypothesisViolatedError : Error {
  explicit HypothesisViolatedError(const std::string& what) : Error(what) {}
};

// A custom class rule accepted a group whose spectrum leaves pi(X).
struct InconsistentClassError : Error {
  explicit InconsistentClassError(const std::string& what) : Error(what) {}
};

// A nonabelian composition factor matches no known simple group order.
struct UnrecognizedSimpleGroupError : Error {
  explicit UnrecognizedSimpleGroupError(const std::string& what) : Error(what) {}
};

}  // namespace hallverdict
