#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lexres/lexsegment.hpp"
#include "lexres/monomial.hpp"

namespace lexres {

inline constexpr std::uint64_t kDefaultProductBudget = 1'000'000;

/// G(I^k) for I = (L(u, v)), sorted by increasing revlex.
///
/// Prefix ideals I^k_{<w} and I^k_{<=w} are represented by positions in `generators`.
class PowerIdeal {
 public:
  PowerIdeal(LexSegmentSpec spec, int k, std::vector<Monomial> generators);

  const LexSegmentSpec& spec() const noexcept { return spec_; }
  int k() const noexcept { return k_; }
  int num_vars() const noexcept { return spec_.num_vars; }
  int generator_degree() const noexcept { return k_ * spec_.degree; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const Monomial& operator[](std::size_t i) const { return generators_[i]; }

  /// Position of `m` in the generator order, if it is a generator.
  std::optional<std::size_t> position(const Monomial& m) const;

  friend bool operator==(const PowerIdeal& a, const PowerIdeal& b) {
    return a.k_ == b.k_ && a.spec_.u == b.spec_.u && a.spec_.v == b.spec_.v &&
           a.spec_.l == b.spec_.l && a.generators_ == b.generators_;
  }

 private:
  LexSegmentSpec spec_;
  int k_;
  std::vector<Monomial> generators_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Distinct products of k members of L(u, v), sorted increasing revlex.
///
/// Throws BudgetExceeded when C(|L| + k - 1, k) exceeds `budget`.
PowerIdeal power_generators(const LexSegmentSpec& spec, int k,
                            std::uint64_t budget = kDefaultProductBudget);

/// True iff some generator z <=_revlex w divides x (membership of x in I^k_{<=w}).
bool prefix_membership(const PowerIdeal& ideal, const Monomial& w, const Monomial& x);

/// Number of k-multisets of an r-element set, saturating at UINT64_MAX.
std::uint64_t multiset_count(std::uint64_t r, int k);

}  // namespace lexres
