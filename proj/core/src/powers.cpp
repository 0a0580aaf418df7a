#include "lexres/powers.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

#include "lexres/errors.hpp"

namespace lexres {

PowerIdeal::PowerIdeal(LexSegmentSpec spec, int k, std::vector<Monomial> generators)
    : spec_(std::move(spec)), k_(k), generators_(std::move(generators)) {
  if (k_ < 1) throw InputError("power k must be >= 1, got " + std::to_string(k_));
  const int deg = k_ * spec_.degree;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].num_vars() != spec_.num_vars || generators_[i].degree() != deg) {
      throw InputError("generator " + to_string(generators_[i]) + " is not of degree " +
                       std::to_string(deg) + " in " + std::to_string(spec_.num_vars) +
                       " variables");
    }
    if (i > 0 && cmp_revlex(generators_[i - 1], generators_[i]) >= 0) {
      throw InputError("generators are not strictly increasing in revlex order");
    }
    index_.emplace(generators_[i], i);
  }
}

std::optional<std::size_t> PowerIdeal::position(const Monomial& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t multiset_count(std::uint64_t r, int k) {
  // C(r + k - 1, k) computed incrementally; each partial product is itself a binomial.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (r == 0) return k == 0 ? 1 : 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t factor = r + static_cast<std::uint64_t>(i) - 1;
    if (c > kMax / factor) return kMax;
    c = c * factor / static_cast<std::uint64_t>(i);
  }
  return c;
}

namespace {

void collect_products(const std::vector<Monomial>& segment, int remaining, std::size_t first,
                      std::vector<int>& exps, const RingContext& ring,
                      std::unordered_set<Monomial, MonomialHash>& out) {
  if (remaining == 0) {
    out.insert(Monomial::from_exponents(ring, exps));
    return;
  }
  for (std::size_t i = first; i < segment.size(); ++i) {
    const auto e = segment[i].exponents();
    for (std::size_t j = 0; j < exps.size(); ++j) exps[j] += e[j];
    collect_products(segment, remaining - 1, i, exps, ring, out);
    for (std::size_t j = 0; j < exps.size(); ++j) exps[j] -= e[j];
  }
}

}  // namespace

PowerIdeal power_generators(const LexSegmentSpec& spec, int k, std::uint64_t budget) {
  if (k < 1) throw InputError("power k must be >= 1, got " + std::to_string(k));
  const auto segment = enumerate_lexsegment(spec);
  const std::uint64_t candidates = multiset_count(segment.size(), k);
  if (candidates > budget) {
    throw BudgetExceeded("G(I^" + std::to_string(k) + ") needs " + std::to_string(candidates) +
                         " candidate products, budget is " + std::to_string(budget));
  }

  const RingContext ring = spec.ring();
  std::unordered_set<Monomial, MonomialHash> products;
  products.reserve(static_cast<std::size_t>(candidates));
  std::vector<int> exps(static_cast<std::size_t>(spec.num_vars), 0);
  collect_products(segment, k, 0, exps, ring, products);

  std::vector<Monomial> gens(products.begin(), products.end());
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return cmp_revlex(a, b) < 0; });

  if (spec.l) {
    for (const Monomial& m : gens) {
      if (bar_tilde_split(m, *spec.l).bar.degree() < k) {
        throw CheckFailure("generator " + to_string(m) + " of I^" + std::to_string(k) +
                           " has deg(bar) < k");
      }
    }
  }
  return PowerIdeal(spec, k, std::move(gens));
}

bool prefix_membership(const PowerIdeal& ideal, const Monomial& w, const Monomial& x) {
  const auto pos = ideal.position(w);
  if (!pos) throw InputError(to_string(w) + " is not a generator of the power ideal");
  for (std::size_t i = 0; i <= *pos; ++i) {
    if (ideal[i].divides(x)) return true;
  }
  return false;
}

}  // namespace lexres
