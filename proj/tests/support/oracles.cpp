#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lexres::testing {

namespace {

void fill_monomials(int n, int remaining, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(remaining);
    out.push_back(Monomial::from_exponents(RingContext(n), cur));
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.push_back(e);
    fill_monomials(n, remaining - e, cur, out);
    cur.pop_back();
  }
}

std::vector<int> difference(const Monomial& a, const Monomial& b) {
  std::vector<int> diff;
  for (Variable i = 1; i <= a.num_vars(); ++i) diff.push_back(a.exponent(i) - b.exponent(i));
  return diff;
}

void compositions(int slots, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = total; a >= 0; --a) {
    cur.push_back(a);
    compositions(slots - 1, total - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monomial> all_monomials(int n, int d) {
  std::vector<Monomial> out;
  std::vector<int> cur;
  fill_monomials(n, d, cur, out);
  return out;
}

int lex_sign_by_difference(const Monomial& a, const Monomial& b) {
  for (int x : difference(a, b)) {
    if (x != 0) return x > 0 ? 1 : -1;
  }
  return 0;
}

int revlex_sign_by_difference(const Monomial& a, const Monomial& b) {
  const auto diff = difference(a, b);
  for (auto it = diff.rbegin(); it != diff.rend(); ++it) {
    if (*it != 0) return *it > 0 ? -1 : 1;
  }
  return 0;
}

std::vector<Monomial> lexsegment_by_filter(const Monomial& u, const Monomial& v) {
  std::vector<Monomial> out;
  for (const Monomial& w : all_monomials(u.num_vars(), u.degree())) {
    if (lex_sign_by_difference(u, w) >= 0 && lex_sign_by_difference(w, v) >= 0) out.push_back(w);
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return lex_sign_by_difference(a, b) > 0; });
  return out;
}

std::vector<Monomial> iterated_shadow_by_divisibility(std::span<const Monomial> T, int i) {
  std::vector<Monomial> out;
  const int n = T.front().num_vars();
  for (const Monomial& w : all_monomials(n, T.front().degree() + i)) {
    if (std::any_of(T.begin(), T.end(), [&](const Monomial& t) { return t.divides(w); })) out.push_back(w);
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return lex_sign_by_difference(a, b) > 0; });
  return out;
}

HilbertNumerator hilbert_by_inclusion_exclusion(std::span<const Monomial> gens) {
  std::vector<std::int64_t> coeff(1, 0);
  const std::size_t r = gens.size();
  const int n = r ? gens.front().num_vars() : 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    std::vector<int> l(static_cast<std::size_t>(n), 0);
    int bits = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (!(mask >> j & 1)) continue;
      ++bits;
      for (Variable i = 1; i <= n; ++i) {
        l[static_cast<std::size_t>(i - 1)] = std::max(l[static_cast<std::size_t>(i - 1)], gens[j].exponent(i));
      }
    }
    int deg = 0;
    for (int x : l) deg += x;
    if (static_cast<int>(coeff.size()) <= deg) coeff.resize(static_cast<std::size_t>(deg) + 1, 0);
    coeff[static_cast<std::size_t>(deg)] += bits % 2 == 0 ? 1 : -1;
  }
  HilbertNumerator p{coeff};
  p.trim();
  return p;
}

std::vector<Monomial> power_by_tuples(std::span<const Monomial> segment, int k) {
  const int n = segment.front().num_vars();
  std::set<std::vector<int>> seen;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (std::size_t j : idx) {
      for (Variable i = 1; i <= n; ++i) e[static_cast<std::size_t>(i - 1)] += segment[j].exponent(i);
    }
    seen.insert(e);
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == segment.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  std::vector<Monomial> out;
  for (const auto& e : seen) out.push_back(Monomial::from_exponents(RingContext(n), e));
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return revlex_sign_by_difference(a, b) < 0; });
  return out;
}

int parity_sign_moving_to_front(std::span<const Variable> sigma, Variable s) {
  // Build the permutation (s, sigma \ s) and count inversions.
  std::vector<Variable> perm{s};
  for (Variable t : sigma) {
    if (t != s) perm.push_back(t);
  }
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Monomial random_monomial(std::mt19937_64& rng, int n, int degree) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int j = 0; j < degree; ++j) ++e[static_cast<std::size_t>(pick(rng))];
  return Monomial::from_exponents(RingContext(n), e);
}

std::string FamilySpec::label() const {
  std::ostringstream os;
  os << "n=" << n << " d=" << d << " l=" << l << " u=" << u << " v=" << v;
  return os.str();
}

std::vector<FamilySpec> linear_form_family(int n_lo, int n_hi, int d_lo, int d_hi) {
  std::vector<FamilySpec> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int d = d_lo; d <= d_hi; ++d) {
      for (int l = 2; l <= n - 1; ++l) {
        std::vector<std::vector<int>> tails;
        std::vector<int> cur;
        compositions(n - l, d - 1, cur, tails);
        for (auto& tail : tails) {
          std::vector<int> eu(static_cast<std::size_t>(n), 0);
          std::vector<int> ev(static_cast<std::size_t>(n), 0);
          eu[0] = 1;
          for (int i = 0; i < n - l; ++i) eu[static_cast<std::size_t>(l + i)] = tail[static_cast<std::size_t>(i)];
          ev[static_cast<std::size_t>(l - 1)] += 1;
          ev[static_cast<std::size_t>(n - 1)] += d - 1;
          const RingContext ring(n);
          out.push_back({n, d, l, tail, Monomial::from_exponents(ring, eu), Monomial::from_exponents(ring, ev)});
        }
      }
    }
  }
  return out;
}

LexSegmentSpec classified_spec(const FamilySpec& f) {
  LexSegmentSpec spec = make_spec(f.u, f.v);
  spec.l = f.l;
  return spec;
}

LexSegmentSpec reference_spec() {
  const RingContext ring(4);
  return with_split(make_spec(parse_monomial("x1x3", ring), parse_monomial("x2x4", ring)));
}

ResolutionComplex resolve(const LexSegmentSpec& spec, int k) {
  return build_resolution(linear_quotients_check(power_generators(spec, k)));
}

}  // namespace lexres::testing
