#include "lexres/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "lexres/errors.hpp"

namespace lexres {

HilbertNumerator HilbertNumerator::constant(std::int64_t c) {
  HilbertNumerator p{{c}};
  p.trim();
  return p;
}

HilbertNumerator HilbertNumerator::monomial_term(std::int64_t c, int degree) {
  HilbertNumerator p;
  p.coefficients.assign(static_cast<std::size_t>(degree) + 1, 0);
  p.coefficients.back() = c;
  p.trim();
  return p;
}

void HilbertNumerator::trim() {
  while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

std::int64_t HilbertNumerator::at(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coefficients.size())) return 0;
  return coefficients[static_cast<std::size_t>(degree)];
}

HilbertNumerator& HilbertNumerator::operator+=(const HilbertNumerator& other) {
  if (coefficients.size() < other.coefficients.size()) coefficients.resize(other.coefficients.size(), 0);
  for (std::size_t i = 0; i < other.coefficients.size(); ++i) coefficients[i] += other.coefficients[i];
  trim();
  return *this;
}

HilbertNumerator& HilbertNumerator::operator-=(const HilbertNumerator& other) {
  if (coefficients.size() < other.coefficients.size()) coefficients.resize(other.coefficients.size(), 0);
  for (std::size_t i = 0; i < other.coefficients.size(); ++i) coefficients[i] -= other.coefficients[i];
  trim();
  return *this;
}

HilbertNumerator operator*(const HilbertNumerator& a, const HilbertNumerator& b) {
  HilbertNumerator p;
  if (a.coefficients.empty() || b.coefficients.empty()) return p;
  p.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
      p.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
    }
  }
  p.trim();
  return p;
}

std::string to_string(const HilbertNumerator& p) {
  if (p.coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < p.coefficients.size(); ++j) {
    std::int64_t c = p.coefficients[j];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = c < 0 ? -c : c;
    if (c != 1 || j == 0) os << c;
    if (j >= 1) os << "t";
    if (j >= 2) os << "^" << j;
    first = false;
  }
  return os.str();
}

namespace {

using Exps = std::vector<int>;

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

int total(const Exps& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

// Minimal generators in a canonical order (degree, then lex-descending).
std::vector<Exps> minimalize(std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end(), [](const Exps& a, const Exps& b) {
    const int da = total(a);
    const int db = total(b);
    if (da != db) return da < db;
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (const Exps& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Exps& h) { return divides(h, g); })) {
      out.push_back(g);
    }
  }
  return out;
}

class HilbertSolver {
 public:
  HilbertSolver(int num_vars, const HilbertOptions& options) : n_(num_vars), options_(options) {}

  HilbertNumerator solve(const std::vector<Exps>& gens) {
    if (++nodes_ > options_.node_limit) {
      throw BudgetExceeded("Hilbert recursion exceeded " + std::to_string(options_.node_limit) +
                           " nodes");
    }
    if (gens.empty()) return HilbertNumerator::constant(1);
    if (total(gens.front()) == 0) return {};  // unit ideal

    if (const auto it = memo_.find(gens); it != memo_.end()) return it->second;

    HilbertNumerator result = coprime_product(gens);
    if (result.coefficients.empty()) {
      result = split(gens);
    }
    memo_.emplace(gens, result);
    return result;
  }

 private:
  // Product of (1 - t^deg g) when the generators have pairwise disjoint supports; empty otherwise.
  HilbertNumerator coprime_product(const std::vector<Exps>& gens) const {
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    for (const Exps& g : gens) {
      for (int i = 0; i < n_; ++i) {
        if (g[static_cast<std::size_t>(i)] == 0) continue;
        if (used[static_cast<std::size_t>(i)]) return {};
        used[static_cast<std::size_t>(i)] = 1;
      }
    }
    HilbertNumerator p = HilbertNumerator::constant(1);
    for (const Exps& g : gens) {
      p = p * (HilbertNumerator::constant(1) - HilbertNumerator::monomial_term(1, total(g)));
    }
    return p;
  }

  HilbertNumerator split(const std::vector<Exps>& gens) {
    // Pivot variable: most frequent among generators that are not pure powers.
    std::vector<int> count(static_cast<std::size_t>(n_), 0);
    for (const Exps& g : gens) {
      int support = 0;
      for (int x : g) support += x > 0;
      if (support < 2) continue;
      for (int i = 0; i < n_; ++i) count[static_cast<std::size_t>(i)] += g[static_cast<std::size_t>(i)] > 0;
    }
    int var = 0;
    for (int i = 0; i < n_; ++i) {
      const auto c = count[static_cast<std::size_t>(i)];
      const auto best = count[static_cast<std::size_t>(var)];
      if (c > best || (c == best && c > 0 && options_.policy == PivotPolicy::frequent_median_exponent)) {
        var = i;
      }
    }

    std::vector<int> exps;
    for (const Exps& g : gens) {
      int support = 0;
      for (int x : g) support += x > 0;
      if (support >= 2 && g[static_cast<std::size_t>(var)] > 0) exps.push_back(g[static_cast<std::size_t>(var)]);
    }
    std::sort(exps.begin(), exps.end());
    const int e = options_.policy == PivotPolicy::frequent_min_exponent ? exps.front()
                                                                       : exps[exps.size() / 2];

    Exps pivot(static_cast<std::size_t>(n_), 0);
    pivot[static_cast<std::size_t>(var)] = e;

    // S/I: 0 -> S/(I : p)(-e) -> S/I -> S/(I + p) -> 0
    std::vector<Exps> sum{pivot};
    std::vector<Exps> colon;
    for (const Exps& g : gens) {
      if (!divides(pivot, g)) sum.push_back(g);
      Exps q = g;
      q[static_cast<std::size_t>(var)] = std::max(0, q[static_cast<std::size_t>(var)] - e);
      colon.push_back(std::move(q));
    }
    HilbertNumerator result = solve(minimalize(std::move(sum)));
    result += HilbertNumerator::monomial_term(1, e) * solve(minimalize(std::move(colon)));
    return result;
  }

  int n_;
  HilbertOptions options_;
  std::uint64_t nodes_ = 0;
  std::map<std::vector<Exps>, HilbertNumerator> memo_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

}  // namespace

HilbertNumerator hilbert_numerator(std::span<const Monomial> gens, const HilbertOptions& options) {
  if (gens.empty()) return HilbertNumerator::constant(1);
  const int n = gens.front().num_vars();
  std::vector<Exps> exps;
  exps.reserve(gens.size());
  for (const Monomial& m : gens) {
    if (m.num_vars() != n) throw InputError("generators live in different rings");
    exps.emplace_back(m.exponents().begin(), m.exponents().end());
  }
  HilbertSolver solver(n, options);
  return solver.solve(minimalize(std::move(exps)));
}

HilbertNumerator euler_characteristic(const ResolutionComplex& rc) {
  HilbertNumerator p = HilbertNumerator::constant(1);
  for (std::size_t i = 1; i < rc.bases.size(); ++i) {
    const std::int64_t sign = i % 2 == 0 ? 1 : -1;
    for (const BasisSymbol& b : rc.bases[i]) p += HilbertNumerator::monomial_term(sign, b.degree);
  }
  return p;
}

bool euler_check(const ResolutionComplex& rc, const HilbertOptions& options) {
  return euler_characteristic(rc) == hilbert_numerator(rc.power().generators(), options);
}

std::size_t sparse_rank_mod_p(std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> columns,
                              std::uint64_t p) {
  // Incremental echelon form. Vectors are kept sorted by descending row index so the leading
  // entry (front) sits at the latest basis element.
  using Vec = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::uint32_t max_row = 0;
  for (auto& col : columns) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    Vec cleaned;
    for (const auto& [r, v] : col) {
      if (v % p == 0) continue;
      if (!cleaned.empty() && cleaned.back().first == r) {
        cleaned.back().second = (cleaned.back().second + v) % p;
        if (cleaned.back().second == 0) cleaned.pop_back();
      } else {
        cleaned.emplace_back(r, v % p);
      }
      max_row = std::max(max_row, r);
    }
    col = std::move(cleaned);
  }
  std::vector<Vec> pivots(static_cast<std::size_t>(max_row) + 1);
  std::size_t rank = 0;
  Vec scratch;
  for (Vec& v : columns) {
    while (!v.empty()) {
      const std::uint32_t lead = v.front().first;
      Vec& piv = pivots[lead];
      if (piv.empty()) {
        const std::uint64_t inv = inv_mod(v.front().second, p);
        for (auto& entry : v) entry.second = mul_mod(entry.second, inv, p);
        piv = std::move(v);
        ++rank;
        break;
      }
      // v -= v_lead * piv (piv has leading coefficient 1)
      const std::uint64_t factor = v.front().second;
      scratch.clear();
      std::size_t a = 1;
      std::size_t b = 1;
      while (a < v.size() || b < piv.size()) {
        if (b >= piv.size() || (a < v.size() && v[a].first > piv[b].first)) {
          scratch.push_back(v[a++]);
        } else if (a >= v.size() || piv[b].first > v[a].first) {
          scratch.emplace_back(piv[b].first, p - mul_mod(factor, piv[b].second, p));
          ++b;
        } else {
          const std::uint64_t val = (v[a].second + p - mul_mod(factor, piv[b].second, p)) % p;
          if (val != 0) scratch.emplace_back(v[a].first, val);
          ++a;
          ++b;
        }
      }
      std::swap(v, scratch);
    }
  }
  return rank;
}

std::size_t evaluated_rank(const ResolutionComplex& rc, int i, std::span<const std::uint64_t> point) {
  if (i < 1 || i >= static_cast<int>(rc.differentials.size())) {
    throw InputError("differential index out of range");
  }
  const SparseMatrix& m = rc.differentials[static_cast<std::size_t>(i)];
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> columns(m.cols);
  for (const auto& e : m.entries) {
    const std::uint64_t x = point[static_cast<std::size_t>(e.var - 1)] % kRankModulus;
    columns[e.col].emplace_back(static_cast<std::uint32_t>(e.row), e.sign > 0 ? x : (kRankModulus - x) % kRankModulus);
  }
  return sparse_rank_mod_p(std::move(columns));
}

RankReport random_rank_check(const ResolutionComplex& rc, std::uint64_t seed, int trials) {
  RankReport report;
  report.seed = seed;
  report.passed = true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, kRankModulus - 1);
  const int n = rc.power().num_vars();
  const int length = rc.length();
  const auto betti = rc.betti();

  for (int t = 0; t < trials; ++t) {
    RankTrial trial;
    for (int j = 0; j < n; ++j) trial.point.push_back(dist(rng));

    // d_0 is the row of generators; nonzero evaluations of units never vanish.
    std::size_t rank0 = 0;
    for (const Monomial& g : rc.power().generators()) {
      std::uint64_t val = 1;
      for (Variable v = 1; v <= n; ++v) {
        val = mul_mod(val, pow_mod(trial.point[static_cast<std::size_t>(v - 1)], static_cast<std::uint64_t>(g.exponent(v)), kRankModulus), kRankModulus);
      }
      if (val != 0) rank0 = 1;
    }
    trial.ranks.push_back(rank0);
    for (int i = 1; i < length; ++i) trial.ranks.push_back(evaluated_rank(rc, i, trial.point));

    trial.passed = true;
    for (int j = 0; j <= length; ++j) {
      std::size_t expected = 0;
      if (j >= 1) expected += trial.ranks[static_cast<std::size_t>(j - 1)];
      if (j < length) expected += trial.ranks[static_cast<std::size_t>(j)];
      const bool ok = betti[static_cast<std::size_t>(j)] == expected;
      trial.exact_at.push_back(ok);
      trial.passed = trial.passed && ok;
    }
    report.passed = report.passed && trial.passed;
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace lexres
