#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lexres/errors.hpp"
#include "lexres/monomial.hpp"
#include "lexres/quotients.hpp"

namespace lexres {

/// Shared data for evaluating the decomposition function g of I^k.
/// Holds a reference: the QuotientStructure must outlive the context.
class DecompositionContext {
 public:
  explicit DecompositionContext(const QuotientStructure& qs);

  const QuotientStructure& quotients() const noexcept { return *qs_; }
  std::optional<int> l() const noexcept { return qs_->power.spec().l; }
  bool classified() const noexcept { return vk_.has_value(); }
  /// v^k; throws InputError when the spec carries no split index.
  const Monomial& vk() const;

 private:
  const QuotientStructure* qs_;
  std::optional<Monomial> vk_;
};

enum class Branch { high, low };

/// One evaluation g(x_s m) = x_s m / x_coefficient.
struct DecompositionRecord {
  std::size_t m_index = 0;
  Variable s = 0;
  Branch branch = Branch::high;
  Monomial g_value;
  std::size_t g_index = 0;
  Variable coefficient = 0;
};

/// Closed form: g(x_s m) = x_s m / x_min(m) if x_s m / x_min(m) ⪰ v^k, else x_s m / x_min(m~).
DecompositionRecord g_closed_form(const DecompositionContext& ctx, std::size_t m_index, Variable s);

/// Position of the first generator (increasing revlex) dividing x. Throws InputError if none does.
std::size_t g_oracle_index(const QuotientStructure& qs, const Monomial& x);
Monomial g_oracle(const QuotientStructure& qs, const Monomial& x);

/// Closed form and oracle disagreed on g(x_s m).
class DecompositionMismatch : public CheckFailure {
 public:
  DecompositionMismatch(DecompositionRecord closed_form, std::size_t oracle_index);

  const DecompositionRecord& closed_form() const noexcept { return closed_form_; }
  std::size_t oracle_index() const noexcept { return oracle_index_; }

 private:
  DecompositionRecord closed_form_;
  std::size_t oracle_index_;
};

enum class GRoute {
  closed_form,           // closed form only
  oracle,                // earliest dividing generator, by linear scan
  closed_form_verified,  // closed form, every value shadowed by the oracle
};

/// table[i][j] is g(x_s m_i) for s = sets[i][j].
using DecompositionTable = std::vector<std::vector<DecompositionRecord>>;

DecompositionTable build_decomposition_table(const DecompositionContext& ctx, GRoute route);

struct RegularityReport {
  enum class Kind { regular, violation, closed_form_mismatch };
  Kind kind = Kind::regular;
  std::size_t m_index = 0;
  Variable s = 0;
  /// violation: t in set(g(x_s m)) but not in set(m).
  Variable t = 0;
  /// closed_form_mismatch: the two generator positions.
  std::size_t closed_form_index = 0;
  std::size_t oracle_index = 0;

  bool regular() const noexcept { return kind == Kind::regular; }
  std::string describe(const QuotientStructure& qs) const;
};

/// Verifies set(g(x_s m)) ⊆ set(m) for every generator m and s in set(m) using the oracle g,
/// cross-checking the closed form when the spec is classified.
RegularityReport regularity_check(const DecompositionContext& ctx);

}  // namespace lexres
