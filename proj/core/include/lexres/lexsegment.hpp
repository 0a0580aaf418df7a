#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexres/monomial.hpp"

namespace lexres {

/// The lexsegment L(u, v) in degree d, optionally carrying the split index l when
/// (u, v) has the shape u = x1 x_{l+1}^{a_{l+1}} ... x_n^{a_n}, v = x_l x_n^{d-1}.
struct LexSegmentSpec {
  int num_vars = 0;
  int degree = 0;
  Monomial u;
  Monomial v;
  std::optional<int> l;

  RingContext ring() const { return RingContext(num_vars); }
};

/// Builds a spec after checking deg u = deg v and u >=_lex v.
LexSegmentSpec make_spec(const Monomial& u, const Monomial& v);

/// All degree-d monomials w with u >=_lex w >=_lex v, lex-descending (endpoints included).
std::vector<Monomial> enumerate_lexsegment(const Monomial& u, const Monomial& v);
std::vector<Monomial> enumerate_lexsegment(const LexSegmentSpec& spec);

/// The lex-next-smaller monomial of the same degree, or nullopt at x_n^d.
std::optional<Monomial> lex_predecessor(const Monomial& m);

/// {x_i w : 1 <= i <= n, w in T}, deduplicated, lex-descending.
std::vector<Monomial> shadow(std::span<const Monomial> monomials);

/// True iff the set equals the lex interval between its lex-max and lex-min.
/// Requires a nonempty equi-degree set (duplicates are ignored).
bool is_lexsegment_set(std::span<const Monomial> monomials);

enum class Verdict { no, yes, unknown_at_depth };

std::string to_string(Verdict v);

struct CompletelyLexReport {
  Verdict verdict = Verdict::unknown_at_depth;
  /// Number of iterated shadows that were enumerated.
  int checked_depth = 0;
  /// First i with Shad^i not a lexsegment set (set iff verdict == no).
  std::optional<int> failing_depth;
  /// A monomial of the lex interval spanned by Shad^i that is missing from Shad^i.
  std::optional<Monomial> witness;
};

struct CompletelyLexOptions {
  int depth = 0;  // 0 means "number of variables"
  /// Treat a lexsegment first shadow as proof that all shadows are lexsegments.
  bool first_shadow_persistence = false;
};

CompletelyLexReport is_completely_lexsegment(std::span<const Monomial> generators,
                                             const CompletelyLexOptions& options);
CompletelyLexReport is_completely_lexsegment(const LexSegmentSpec& spec,
                                             const CompletelyLexOptions& options);

/// Result of moving common x1 powers out of (u, v).
struct NormalizedSpec {
  LexSegmentSpec spec;
  /// The power of x1 divided out of both u and v.
  int x1_shift = 0;
  /// nu_1(u) == nu_1(v): the ideal lives on x_2..x_n in lower degree.
  bool reduced_to_smaller_ring = false;
};

NormalizedSpec normalize_spec(const Monomial& u, const Monomial& v);

struct LinearForm {
  bool matches = false;
  int l = 0;
  std::string note;
};

/// Tests the linear-resolution shape u = x1 x_{l+1}^{a_{l+1}} ... x_n^{a_n}, v = x_l x_n^{d-1}.
/// Requires a normalized spec (x1 | u, x1 ∤ v).
LinearForm classify_linear_form(const LexSegmentSpec& spec);

struct Classification {
  CompletelyLexReport completely_lex;
  LinearForm linear_form;
  std::string notes;
};

Classification classify(const LexSegmentSpec& spec, const CompletelyLexOptions& options);

/// Returns a copy of the spec with `l` filled in when the linear form matches.
LexSegmentSpec with_split(const LexSegmentSpec& spec);

}  // namespace lexres
