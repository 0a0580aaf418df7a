#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexres/decomposition.hpp"
#include "lexres/monomial.hpp"
#include "lexres/quotients.hpp"

namespace lexres {

/// The basis element f(sigma; m_gen) of F_{|sigma|+1}.
struct BasisSymbol {
  std::vector<Variable> sigma;  // sorted ascending, subset of set(m_gen)
  std::size_t gen = 0;          // position in increasing revlex order
  int degree = 0;               // deg(m_gen) + |sigma|

  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};

/// Matrix entry sign * x_var at (row, col).
struct SignedVariableEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  int sign = 1;
  Variable var = 0;

  friend bool operator==(const SignedVariableEntry&, const SignedVariableEntry&) = default;
};

/// Coordinate storage, entries sorted by (col, row).
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SignedVariableEntry> entries;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

/// |{t in sigma : t < s}|
int alpha(std::span<const Variable> sigma, Variable s);

/// The minimal graded free resolution F of S/I^k built by iterated mapping cones.
///
/// bases[i] is the basis of F_i for i >= 1; bases[0] stays empty (F_0 = S).
/// differentials[i] is d_i : F_{i+1} -> F_i. differentials[0] carries only its shape
/// (1 x beta_1): d_0 sends f(∅; m) to the generator m itself.
struct ResolutionComplex {
  explicit ResolutionComplex(QuotientStructure qs) : quotients(std::move(qs)) {}

  QuotientStructure quotients;
  std::vector<std::vector<BasisSymbol>> bases;
  std::vector<SparseMatrix> differentials;

  const PowerIdeal& power() const noexcept { return quotients.power; }
  /// Largest i with F_i != 0.
  int length() const noexcept { return static_cast<int>(bases.size()) - 1; }
  /// Ranks of F_0, F_1, ..., read off the bases.
  std::vector<std::size_t> betti() const;
  /// Graded shift of F_i: every basis element of F_i (i >= 1) has degree kd + i - 1.
  int shift(int i) const;

  std::optional<std::size_t> position(std::span<const Variable> sigma, std::size_t gen) const;

  friend bool operator==(const ResolutionComplex& a, const ResolutionComplex& b) {
    return a.quotients.power == b.quotients.power && a.quotients.sets == b.quotients.sets &&
           a.bases == b.bases && a.differentials == b.differentials;
  }

  /// Rebuilds the (sigma, gen) -> position index; call after filling `bases` by hand.
  void reindex();

 private:
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index_;
};

/// Basis of F_i for i = 1 .. 1 + max |set(m)|, ordered by generator position, then sigma
/// lexicographically. The returned vector has an empty slot at index 0.
std::vector<std::vector<BasisSymbol>> resolution_basis(const QuotientStructure& qs);

/// One summand of d(f(sigma; w)) before the zero rule is applied.
struct DifferentialTerm {
  BasisSymbol target;
  int sign = 1;
  Variable var = 0;
  bool dropped = false;  // target sigma is not a subset of set(target gen)
};

/// Term-by-term expansion of d(f(sigma; w)) for sigma nonempty:
///   sum_s (-1)^alpha(sigma;s) (x_s w / g(x_s w)) f(sigma \ s; g(x_s w))
///   - sum_s (-1)^alpha(sigma;s) x_s f(sigma \ s; w)
std::vector<DifferentialTerm> differential_terms(const QuotientStructure& qs,
                                                 const DecompositionTable& table,
                                                 const BasisSymbol& symbol);

struct ResolutionOptions {
  /// closed_form routes need a classified spec; the oracle route needs a regular g.
  GRoute route = GRoute::closed_form_verified;
};

/// Throws InputError for non-linear quotients or a missing split index,
/// CheckFailure when the oracle route meets a non-regular decomposition function.
ResolutionComplex build_resolution(const QuotientStructure& qs, const ResolutionOptions& options = {});

/// Assembles d_i (i >= 1) from a decomposition table.
SparseMatrix differential(const ResolutionComplex& rc, const DecompositionTable& table, int i);

/// beta_0 = 1 and beta_i = sum_m C(|set(m)|, i - 1), computed from set sizes alone.
std::vector<std::size_t> betti_numbers(const QuotientStructure& qs);

/// True iff d_i ∘ d_{i+1} = 0 symbolically (i >= 0). Vacuous past the end of the complex.
bool compose_check(const ResolutionComplex& rc, int i);

/// True iff every entry of every d_i (i >= 1) is ±x_j with 1 <= j <= n.
bool minimality_check(const ResolutionComplex& rc);

/// True iff deg(row symbol) + 1 = deg(column symbol) for every entry.
bool degree_homogeneity_check(const ResolutionComplex& rc);

}  // namespace lexres
