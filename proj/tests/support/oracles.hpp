#pragma once

// Brute-force reference implementations used only by the test suites. Each one follows the
// textbook definition directly and shares no code path with the library routine it checks.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lexres/lexres.hpp"

namespace lexres::testing {

/// Every monomial of degree d in n variables, in no particular order.
std::vector<Monomial> all_monomials(int n, int d);

/// Lex comparison via the sign of the first nonzero entry of a - b.
int lex_sign_by_difference(const Monomial& a, const Monomial& b);

/// Revlex comparison via the sign of the last nonzero entry of a - b (negated).
int revlex_sign_by_difference(const Monomial& a, const Monomial& b);

/// L(u, v) by filtering all degree-d monomials, lex-descending.
std::vector<Monomial> lexsegment_by_filter(const Monomial& u, const Monomial& v);

/// Degree-(d + i) monomials divisible by some member of T.
std::vector<Monomial> iterated_shadow_by_divisibility(std::span<const Monomial> T, int i);

/// sum_{A ⊆ gens} (-1)^|A| t^{deg lcm(A)}
HilbertNumerator hilbert_by_inclusion_exclusion(std::span<const Monomial> gens);

/// Distinct k-fold products enumerated as all k-tuples (not multisets), sorted by the
/// difference-vector revlex comparison.
std::vector<Monomial> power_by_tuples(std::span<const Monomial> segment, int k);

/// Sign of the permutation that moves s to the front of sigma: (-1)^(inversions).
int parity_sign_moving_to_front(std::span<const Variable> sigma, Variable s);

/// Uniformly random monomial of the given degree.
Monomial random_monomial(std::mt19937_64& rng, int n, int degree);

/// One member of the linear-resolution family: u = x1 x_{l+1}^{a_{l+1}} ... x_n^{a_n},
/// v = x_l x_n^{d-1}.
struct FamilySpec {
  int n = 0;
  int d = 0;
  int l = 0;
  std::vector<int> tail;  // a_{l+1}, ..., a_n, summing to d - 1
  Monomial u;
  Monomial v;

  std::string label() const;
};

/// All shape instances for n in [n_lo, n_hi], d in [d_lo, d_hi].
std::vector<FamilySpec> linear_form_family(int n_lo, int n_hi, int d_lo, int d_hi);

/// A classified spec for a family member.
LexSegmentSpec classified_spec(const FamilySpec& f);

/// L(x1x3, x2x4) in K[x1..x4] with l = 2.
LexSegmentSpec reference_spec();

/// Power, quotients and resolution (closed_form_verified route) in one call.
ResolutionComplex resolve(const LexSegmentSpec& spec, int k);

}  // namespace lexres::testing
