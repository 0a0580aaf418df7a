#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lexres {

/// Index of a ring variable. Variables are numbered x_1..x_n, so valid values are 1..n.
using Variable = int;

/// The polynomial ring K[x_1, ..., x_n]. Only the number of variables matters here.
class RingContext {
 public:
  explicit RingContext(int num_vars);

  int num_vars() const noexcept { return num_vars_; }

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  int num_vars_;
};

/// A monomial x_1^{e_1} ... x_n^{e_n} stored as a dense exponent vector.
///
/// Immutable once built; the total degree is cached at construction.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(const RingContext& ctx, std::span<const int> exponents);
  static Monomial one(const RingContext& ctx);
  static Monomial variable(const RingContext& ctx, Variable i, int power = 1);

  int num_vars() const noexcept { return static_cast<int>(exponents_.size()); }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// nu_i(m) for a 1-based variable index.
  int exponent(Variable i) const { return exponents_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> exponents() const noexcept { return exponents_; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;

  /// m * x_i
  Monomial times_variable(Variable i) const;
  /// m / x_i; the caller guarantees x_i | m.
  Monomial over_variable(Variable i) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exponents_ == b.exponents_;
  }

  std::size_t hash() const noexcept;

 private:
  explicit Monomial(std::vector<int> exponents);

  std::vector<int> exponents_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// m = bar * tilde with bar in K[x_1..x_l] and tilde in K[x_{l+1}..x_n].
struct BarTildeSplit {
  Monomial bar;
  Monomial tilde;
  int l = 0;
};

// Orders. All three return a full three-way ordering; `less` means a < b in that order.

/// Lexicographic order with x_1 > x_2 > ... > x_n.
std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b);

/// Reverse lexicographic order on monomials of equal degree:
/// a < b iff at the largest index s where they differ, nu_s(a) > nu_s(b).
std::strong_ordering cmp_revlex(const Monomial& a, const Monomial& b);

/// The order used by the decomposition function: compare deg(bar) first, then lex.
/// Requires equal degrees and 2 <= l <= n - 1.
std::strong_ordering cmp_prec(const Monomial& a, const Monomial& b, int l);

BarTildeSplit bar_tilde_split(const Monomial& m, int l);

Monomial multiply(const Monomial& a, const Monomial& b);
std::optional<Monomial> try_divide(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial power(const Monomial& m, int k);

/// min(supp(m)); throws InputError for m = 1.
Variable min_index(const Monomial& m);
/// max(supp(m)); throws InputError for m = 1.
Variable max_index(const Monomial& m);
/// min(supp(m) ∩ {l+1..n}); throws InputError if that set is empty.
Variable min_tilde_index(const Monomial& m, int l);

/// Sorted list of variables with a nonzero exponent.
std::vector<Variable> support(const Monomial& m);

/// Checks 2 <= l <= n - 1, throwing InputError otherwise.
void require_valid_split(int num_vars, int l);

/// "x1x3", "x2^2x4", "1".
std::string to_string(const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace lexres
