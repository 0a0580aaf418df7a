#include "lexres/lexsegment.hpp"

#include <algorithm>
#include <unordered_set>

#include "lexres/errors.hpp"

namespace lexres {

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) { return cmp_lex(a, b) > 0; }

std::vector<Monomial> sorted_unique_lex_desc(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), lex_greater);
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return ms;
}

// First interval element missing from `sorted` (lex-descending, deduplicated), if any.
std::optional<Monomial> interval_gap(const std::vector<Monomial>& sorted) {
  std::optional<Monomial> w = sorted.front();
  for (const Monomial& m : sorted) {
    if (!(*w == m)) return w;
    if (&m != &sorted.back()) w = lex_predecessor(*w);
  }
  return std::nullopt;
}

}  // namespace

LexSegmentSpec make_spec(const Monomial& u, const Monomial& v) {
  if (u.num_vars() != v.num_vars()) {
    throw InputError("u and v live in different rings");
  }
  if (u.degree() != v.degree()) {
    throw InputError("u and v must have the same degree (" + std::to_string(u.degree()) +
                     " vs " + std::to_string(v.degree()) + ")");
  }
  if (cmp_lex(u, v) < 0) {
    throw InputError("need u >=_lex v, got u = " + to_string(u) + ", v = " + to_string(v));
  }
  return LexSegmentSpec{u.num_vars(), u.degree(), u, v, std::nullopt};
}

std::optional<Monomial> lex_predecessor(const Monomial& m) {
  const int n = m.num_vars();
  int j = -1;
  for (int i = n - 2; i >= 0; --i) {
    if (m.exponents()[static_cast<std::size_t>(i)] > 0) {
      j = i;
      break;
    }
  }
  if (j < 0) return std::nullopt;
  std::vector<int> e(m.exponents().begin(), m.exponents().end());
  int rest = 0;
  for (int i = j + 1; i < n; ++i) {
    rest += e[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(i)] = 0;
  }
  --e[static_cast<std::size_t>(j)];
  e[static_cast<std::size_t>(j + 1)] = rest + 1;
  return Monomial::from_exponents(RingContext(n), e);
}

std::vector<Monomial> enumerate_lexsegment(const Monomial& u, const Monomial& v) {
  make_spec(u, v);
  std::vector<Monomial> out;
  std::optional<Monomial> w = u;
  while (w) {
    out.push_back(*w);
    if (*w == v) break;
    w = lex_predecessor(*w);
  }
  return out;
}

std::vector<Monomial> enumerate_lexsegment(const LexSegmentSpec& spec) {
  return enumerate_lexsegment(spec.u, spec.v);
}

std::vector<Monomial> shadow(std::span<const Monomial> monomials) {
  std::vector<Monomial> out;
  out.reserve(monomials.size() * 4);
  for (const Monomial& w : monomials) {
    for (Variable i = 1; i <= w.num_vars(); ++i) out.push_back(w.times_variable(i));
  }
  return sorted_unique_lex_desc(std::move(out));
}

bool is_lexsegment_set(std::span<const Monomial> monomials) {
  if (monomials.empty()) throw InputError("is_lexsegment_set needs a nonempty set");
  const int d = monomials.front().degree();
  for (const Monomial& m : monomials) {
    if (m.degree() != d) throw InputError("is_lexsegment_set needs an equi-degree set");
  }
  const auto sorted = sorted_unique_lex_desc({monomials.begin(), monomials.end()});
  return !interval_gap(sorted).has_value();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::no:
      return "no";
    case Verdict::yes:
      return "yes";
    case Verdict::unknown_at_depth:
      return "unknown-at-depth";
  }
  return "?";
}

CompletelyLexReport is_completely_lexsegment(std::span<const Monomial> generators,
                                             const CompletelyLexOptions& options) {
  if (generators.empty()) throw InputError("is_completely_lexsegment needs generators");
  const int depth = options.depth > 0 ? options.depth : generators.front().num_vars();
  CompletelyLexReport report;

  std::vector<Monomial> current = sorted_unique_lex_desc({generators.begin(), generators.end()});
  if (!is_lexsegment_set(current)) {
    report.verdict = Verdict::no;
    report.failing_depth = 0;
    report.witness = interval_gap(current);
    return report;
  }
  for (int i = 1; i <= depth; ++i) {
    current = shadow(current);
    report.checked_depth = i;
    if (auto gap = interval_gap(current)) {
      report.verdict = Verdict::no;
      report.failing_depth = i;
      report.witness = std::move(gap);
      return report;
    }
  }
  report.verdict = options.first_shadow_persistence ? Verdict::yes : Verdict::unknown_at_depth;
  return report;
}

CompletelyLexReport is_completely_lexsegment(const LexSegmentSpec& spec,
                                             const CompletelyLexOptions& options) {
  const auto gens = enumerate_lexsegment(spec);
  return is_completely_lexsegment(gens, options);
}

NormalizedSpec normalize_spec(const Monomial& u, const Monomial& v) {
  const LexSegmentSpec original = make_spec(u, v);
  const int a1 = u.exponent(1);
  const int b1 = v.exponent(1);
  if (a1 == 0) {
    throw InputError("normalization needs x1 | u, got u = " + to_string(u));
  }
  if (b1 == 0) return {original, 0, false};

  const Monomial common = Monomial::variable(original.ring(), 1, b1);
  const Monomial nu = *try_divide(u, common);
  const Monomial nv = *try_divide(v, common);
  return {make_spec(nu, nv), b1, a1 == b1};
}

LinearForm classify_linear_form(const LexSegmentSpec& spec) {
  const Monomial& u = spec.u;
  const Monomial& v = spec.v;
  if (u.exponent(1) < 1 || v.exponent(1) != 0) {
    throw InputError("classify_linear_form needs a normalized spec (x1 | u and x1 does not divide v)");
  }
  const int n = spec.num_vars;
  const int d = spec.degree;
  LinearForm out;
  if (d < 2) {
    out.note = "degree " + std::to_string(d) + " < 2";
    return out;
  }
  const int l = min_index(v);
  if (l < 2 || l > n - 1) {
    out.note = "min(supp(v)) = " + std::to_string(l) + " is not in 2.." + std::to_string(n - 1);
    return out;
  }
  const RingContext ring = spec.ring();
  const Monomial expected_v =
      multiply(Monomial::variable(ring, l), Monomial::variable(ring, n, d - 1));
  if (!(v == expected_v)) {
    out.note = "v = " + to_string(v) + " differs from x_l x_n^(d-1) = " + to_string(expected_v);
    return out;
  }
  if (u.exponent(1) != 1) {
    out.note = "nu_1(u) = " + std::to_string(u.exponent(1)) + " but the shape needs 1";
    return out;
  }
  for (Variable i = 2; i <= l; ++i) {
    if (u.exponent(i) != 0) {
      out.note = "u is divisible by x" + std::to_string(i) + " with 2 <= " + std::to_string(i) +
                 " <= l = " + std::to_string(l);
      return out;
    }
  }
  out.matches = true;
  out.l = l;
  out.note = "u = x1 x_{l+1}^a... and v = x_l x_n^(d-1) with l = " + std::to_string(l);
  return out;
}

Classification classify(const LexSegmentSpec& spec, const CompletelyLexOptions& options) {
  Classification c;
  c.linear_form = classify_linear_form(spec);
  c.completely_lex = is_completely_lexsegment(spec, options);
  if (c.completely_lex.verdict == Verdict::no) {
    c.notes = "Shad^" + std::to_string(*c.completely_lex.failing_depth) +
              " is not a lexsegment set; missing " + to_string(*c.completely_lex.witness);
  } else {
    c.notes = "all " + std::to_string(c.completely_lex.checked_depth) +
              " enumerated shadows are lexsegment sets";
  }
  return c;
}

LexSegmentSpec with_split(const LexSegmentSpec& spec) {
  LexSegmentSpec out = spec;
  const LinearForm form = classify_linear_form(spec);
  out.l = form.matches ? std::optional<int>(form.l) : std::nullopt;
  return out;
}

}  // namespace lexres
