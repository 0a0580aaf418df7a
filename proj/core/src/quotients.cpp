#include "lexres/quotients.hpp"

#include <algorithm>

#include "lexres/errors.hpp"

namespace lexres {

namespace {

// Removes every monomial divisible by another member; input order is irrelevant.
std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return cmp_lex(a, b) > 0;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> out;
  for (const Monomial& m : ms) {
    const bool redundant =
        std::any_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

Monomial colon_quotient(const Monomial& prior, const Monomial& m) {
  return *try_divide(prior, gcd(prior, m));
}

}  // namespace

bool QuotientStructure::in_set(std::size_t i, Variable s) const {
  const auto& set = sets[i];
  return std::binary_search(set.begin(), set.end(), s);
}

bool QuotientStructure::contains_subset(std::size_t i, std::span<const Variable> sigma) const {
  const auto& set = sets[i];
  return std::includes(set.begin(), set.end(), sigma.begin(), sigma.end());
}

std::vector<Monomial> colon_minimal_generators(std::span<const Monomial> prefix,
                                               const Monomial& m) {
  std::vector<Monomial> quotients;
  quotients.reserve(prefix.size());
  for (const Monomial& p : prefix) quotients.push_back(colon_quotient(p, m));
  return minimalize(std::move(quotients));
}

QuotientStructure linear_quotients_check(const PowerIdeal& ideal) {
  const auto& gens = ideal.generators();
  const int n = ideal.num_vars();
  QuotientStructure qs{ideal, std::vector<std::vector<Variable>>(gens.size()), std::nullopt};

  std::vector<int> q(static_cast<std::size_t>(n));
  std::vector<char> marked(static_cast<std::size_t>(n));
  std::vector<std::size_t> nonlinear;  // prefix positions whose quotient has degree >= 2

  for (std::size_t i = 1; i < gens.size(); ++i) {
    const auto mi = gens[i].exponents();
    std::fill(marked.begin(), marked.end(), 0);
    nonlinear.clear();
    for (std::size_t j = 0; j < i; ++j) {
      const auto mj = gens[j].exponents();
      int deg = 0;
      int last = -1;
      for (int t = 0; t < n; ++t) {
        const int e = std::max(mj[static_cast<std::size_t>(t)] - mi[static_cast<std::size_t>(t)], 0);
        deg += e;
        if (e > 0) last = t;
      }
      if (deg == 1) {
        marked[static_cast<std::size_t>(last)] = 1;
      } else {
        nonlinear.push_back(j);
      }
    }
    for (int t = 0; t < n; ++t) {
      if (marked[static_cast<std::size_t>(t)]) qs.sets[i].push_back(t + 1);
    }

    if (qs.failure) continue;
    std::vector<Monomial> survivors;
    for (std::size_t j : nonlinear) {
      const auto mj = gens[j].exponents();
      bool covered = false;
      for (int t = 0; t < n && !covered; ++t) {
        covered = marked[static_cast<std::size_t>(t)] &&
                  mj[static_cast<std::size_t>(t)] > mi[static_cast<std::size_t>(t)];
      }
      if (!covered) survivors.push_back(colon_quotient(gens[j], gens[i]));
    }
    if (!survivors.empty()) {
      qs.failure = QuotientFailure{i, minimalize(std::move(survivors)).front()};
    }
  }
  return qs;
}

std::vector<int> set_cardinality_profile(const QuotientStructure& qs) {
  if (!qs.is_linear()) throw InputError("set sizes are only meaningful for linear quotients");
  std::vector<int> sizes;
  sizes.reserve(qs.sets.size());
  for (const auto& s : qs.sets) sizes.push_back(static_cast<int>(s.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::optional<SetLemmaViolation> check_set_lemmas(const QuotientStructure& qs) {
  const auto& gens = qs.power.generators();
  const auto& spec = qs.power.spec();
  std::optional<Monomial> vk;
  if (spec.l) vk = power(spec.v, qs.power.k());

  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Monomial& m = gens[i];
    const Variable lo = min_index(m);
    for (Variable s : qs.sets[i]) {
      if (s <= lo) return SetLemmaViolation{"setmin", i, s};
      if (!vk) continue;
      const Monomial shifted = m.times_variable(s).over_variable(lo);
      if (cmp_prec(shifted, *vk, *spec.l) < 0) {
        const BarTildeSplit split = bar_tilde_split(m, *spec.l);
        if (split.tilde.is_one() || s <= min_tilde_index(m, *spec.l)) {
          return SetLemmaViolation{"setmin2", i, s};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace lexres
