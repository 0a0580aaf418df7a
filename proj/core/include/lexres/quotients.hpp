#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexres/monomial.hpp"
#include "lexres/powers.hpp"

namespace lexres {

/// Where the colon (m_1, ..., m_{i-1}) : (m_i) stops being generated by variables.
struct QuotientFailure {
  std::size_t index = 0;
  Monomial colon_generator;
};

/// Linear-quotient data of G(I^k) in increasing revlex order.
struct QuotientStructure {
  PowerIdeal power;
  /// sets[i] = set(m_i), sorted ascending; for a failing index only the variable part is kept.
  std::vector<std::vector<Variable>> sets;
  std::optional<QuotientFailure> failure;

  bool is_linear() const noexcept { return !failure.has_value(); }
  /// True iff s is in set(m_i).
  bool in_set(std::size_t i, Variable s) const;
  /// True iff sigma ⊆ set(m_i); sigma sorted ascending.
  bool contains_subset(std::size_t i, std::span<const Variable> sigma) const;
};

/// Minimal monomial generators of (prefix) : (m), ordered by degree then lex-descending.
std::vector<Monomial> colon_minimal_generators(std::span<const Monomial> prefix, const Monomial& m);

QuotientStructure linear_quotients_check(const PowerIdeal& ideal);

/// Sorted multiset {|set(m_i)|}. Throws InputError if the structure is not linear.
std::vector<int> set_cardinality_profile(const QuotientStructure& qs);

struct SetLemmaViolation {
  std::string lemma;  // "setmin" or "setmin2"
  std::size_t index = 0;
  Variable s = 0;
};

/// Checks s > min(m) for every s in set(m), and, when the spec carries l,
/// s > min(m~) whenever x_s m / x_min(m) ≺ v^k. Returns the first violation.
std::optional<SetLemmaViolation> check_set_lemmas(const QuotientStructure& qs);

}  // namespace lexres
