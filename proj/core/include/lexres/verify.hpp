#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lexres/monomial.hpp"
#include "lexres/resolution.hpp"

namespace lexres {

/// Integer polynomial N(t) with Hilb(S/I) = N(t) / (1 - t)^n. coefficients[j] multiplies t^j.
struct HilbertNumerator {
  std::vector<std::int64_t> coefficients;

  static HilbertNumerator constant(std::int64_t c);
  static HilbertNumerator monomial_term(std::int64_t c, int degree);

  /// Drops trailing zero coefficients; the zero polynomial has no coefficients.
  void trim();
  std::int64_t at(int degree) const;
  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }

  HilbertNumerator& operator+=(const HilbertNumerator& other);
  HilbertNumerator& operator-=(const HilbertNumerator& other);
  friend HilbertNumerator operator+(HilbertNumerator a, const HilbertNumerator& b) { return a += b; }
  friend HilbertNumerator operator-(HilbertNumerator a, const HilbertNumerator& b) { return a -= b; }
  friend HilbertNumerator operator*(const HilbertNumerator& a, const HilbertNumerator& b);
  friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;
};

/// "1 - 5t^2 + 6t^3 - 2t^4"
std::string to_string(const HilbertNumerator& p);

enum class PivotPolicy {
  /// Most frequent variable among non-pure-power generators, lowest index on ties,
  /// pivot exponent = smallest positive exponent of that variable.
  frequent_min_exponent,
  /// Most frequent variable, highest index on ties, pivot exponent = median exponent.
  frequent_median_exponent,
};

struct HilbertOptions {
  PivotPolicy policy = PivotPolicy::frequent_min_exponent;
  /// Maximum number of recursion nodes; BudgetExceeded beyond it.
  std::uint64_t node_limit = 2'000'000;
};

/// Numerator of the Hilbert series of S/(gens). Generators need not be minimal or equi-degree.
/// An empty list is the zero ideal (N = 1).
HilbertNumerator hilbert_numerator(std::span<const Monomial> gens, const HilbertOptions& options = {});

/// sum_i (-1)^i sum_{b in basis F_i} t^{deg b}, with F_0 contributing +1.
HilbertNumerator euler_characteristic(const ResolutionComplex& rc);

/// euler_characteristic(rc) == hilbert_numerator(G(I^k)).
bool euler_check(const ResolutionComplex& rc, const HilbertOptions& options = {});

/// Largest prime below 2^31.
inline constexpr std::uint64_t kRankModulus = 2147483647;

struct RankTrial {
  std::vector<std::uint64_t> point;  // values of x_1..x_n
  std::vector<std::size_t> ranks;    // rank d_0, d_1, ..., d_{L-1}
  /// exact_at[j]: rank F_j == rank d_{j-1} + rank d_j (missing terms are 0), j = 0..L.
  std::vector<bool> exact_at;
  bool passed = false;
};

/// Randomized evaluation of the complex at nonzero points modulo kRankModulus.
/// Passing is a necessary condition for exactness only.
struct RankReport {
  std::uint64_t seed = 0;
  std::uint64_t modulus = kRankModulus;
  std::vector<RankTrial> trials;
  bool passed = false;
};

RankReport random_rank_check(const ResolutionComplex& rc, std::uint64_t seed, int trials);

/// Rank modulo kRankModulus of d_i (i >= 1) evaluated at `point` (values for x_1..x_n).
std::size_t evaluated_rank(const ResolutionComplex& rc, int i, std::span<const std::uint64_t> point);

/// Rank of a sparse matrix over Z/p; each column is a list of (row, value) pairs with values in [0, p).
std::size_t sparse_rank_mod_p(std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> columns,
                              std::uint64_t p = kRankModulus);

}  // namespace lexres
