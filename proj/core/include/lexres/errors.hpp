#pragma once

#include <stdexcept>
#include <string>

namespace lexres {

/// Malformed or out-of-contract input (bad monomial text, wrong ring, invalid l, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration or recursion budget was exhausted. Nothing partial is returned.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (closed form vs oracle, structural lemma, ...).
class CheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lexres
