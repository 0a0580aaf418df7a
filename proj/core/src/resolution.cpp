#include "lexres/resolution.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

#include "lexres/errors.hpp"

namespace lexres {

namespace {

std::uint64_t symbol_key(std::span<const Variable> sigma, std::size_t gen, int num_vars) {
  std::uint64_t mask = 0;
  for (Variable s : sigma) mask |= std::uint64_t{1} << (s - 1);
  return (static_cast<std::uint64_t>(gen) << num_vars) | mask;
}

// All size-r subsets of `set` (sorted), in lexicographic order of the sorted sequences.
void append_subsets(const std::vector<Variable>& set, std::size_t r, std::size_t gen, int base_degree,
                    std::vector<BasisSymbol>& out) {
  if (r > set.size()) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t j = 0; j < r; ++j) idx[j] = j;
  while (true) {
    BasisSymbol b;
    b.gen = gen;
    b.degree = base_degree + static_cast<int>(r);
    b.sigma.reserve(r);
    for (std::size_t j : idx) b.sigma.push_back(set[j]);
    out.push_back(std::move(b));

    std::size_t j = r;
    while (j > 0 && idx[j - 1] == set.size() - r + (j - 1)) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t t = j; t < r; ++t) idx[t] = idx[t - 1] + 1;
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// Column start offsets for a (col, row)-sorted matrix.
std::vector<std::size_t> column_starts(const SparseMatrix& m) {
  std::vector<std::size_t> start(m.cols + 1, 0);
  for (const auto& e : m.entries) ++start[e.col + 1];
  for (std::size_t c = 0; c < m.cols; ++c) start[c + 1] += start[c];
  return start;
}

}  // namespace

int alpha(std::span<const Variable> sigma, Variable s) {
  return static_cast<int>(std::count_if(sigma.begin(), sigma.end(), [s](Variable t) { return t < s; }));
}

std::vector<std::size_t> ResolutionComplex::betti() const {
  std::vector<std::size_t> b{1};
  for (std::size_t i = 1; i < bases.size(); ++i) b.push_back(bases[i].size());
  return b;
}

int ResolutionComplex::shift(int i) const {
  if (i == 0) return 0;
  return power().generator_degree() + i - 1;
}

void ResolutionComplex::reindex() {
  index_.assign(bases.size(), {});
  const int n = power().num_vars();
  for (std::size_t i = 1; i < bases.size(); ++i) {
    for (std::size_t p = 0; p < bases[i].size(); ++p) {
      index_[i].emplace(symbol_key(bases[i][p].sigma, bases[i][p].gen, n), p);
    }
  }
}

std::optional<std::size_t> ResolutionComplex::position(std::span<const Variable> sigma,
                                                       std::size_t gen) const {
  const std::size_t i = sigma.size() + 1;
  if (i >= index_.size()) return std::nullopt;
  const auto it = index_[i].find(symbol_key(sigma, gen, power().num_vars()));
  if (it == index_[i].end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<BasisSymbol>> resolution_basis(const QuotientStructure& qs) {
  if (!qs.is_linear()) throw InputError("the mapping-cone basis needs linear quotients");
  std::size_t max_set = 0;
  for (const auto& s : qs.sets) max_set = std::max(max_set, s.size());

  const int deg = qs.power.generator_degree();
  std::vector<std::vector<BasisSymbol>> bases(max_set + 2);
  for (std::size_t i = 1; i < bases.size(); ++i) {
    for (std::size_t g = 0; g < qs.sets.size(); ++g) {
      append_subsets(qs.sets[g], i - 1, g, deg, bases[i]);
    }
  }
  return bases;
}

std::vector<DifferentialTerm> differential_terms(const QuotientStructure& qs,
                                                 const DecompositionTable& table,
                                                 const BasisSymbol& symbol) {
  std::vector<DifferentialTerm> terms;
  const auto& set_w = qs.sets[symbol.gen];
  const auto& row = table[symbol.gen];
  for (std::size_t j = 0; j < symbol.sigma.size(); ++j) {
    const Variable s = symbol.sigma[j];
    const int sign = alpha(symbol.sigma, s) % 2 == 0 ? 1 : -1;
    const auto at = std::lower_bound(set_w.begin(), set_w.end(), s);
    const DecompositionRecord& rec = row[static_cast<std::size_t>(at - set_w.begin())];

    std::vector<Variable> rest = symbol.sigma;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));

    DifferentialTerm via_g;
    via_g.target = BasisSymbol{rest, rec.g_index, symbol.degree - 1};
    via_g.sign = sign;
    via_g.var = rec.coefficient;
    via_g.dropped = !qs.contains_subset(rec.g_index, rest);
    terms.push_back(std::move(via_g));

    DifferentialTerm koszul;
    koszul.target = BasisSymbol{std::move(rest), symbol.gen, symbol.degree - 1};
    koszul.sign = -sign;
    koszul.var = s;
    terms.push_back(std::move(koszul));
  }
  return terms;
}

SparseMatrix differential(const ResolutionComplex& rc, const DecompositionTable& table, int i) {
  if (i < 1 || i + 1 >= static_cast<int>(rc.bases.size())) {
    throw InputError("differential index " + std::to_string(i) + " out of range");
  }
  const auto& domain = rc.bases[static_cast<std::size_t>(i + 1)];
  SparseMatrix m;
  m.rows = rc.bases[static_cast<std::size_t>(i)].size();
  m.cols = domain.size();
  for (std::size_t col = 0; col < domain.size(); ++col) {
    const std::size_t first = m.entries.size();
    for (const DifferentialTerm& t : differential_terms(rc.quotients, table, domain[col])) {
      if (t.dropped) continue;
      const auto row = rc.position(t.target.sigma, t.target.gen);
      if (!row) throw CheckFailure("differential target missing from the basis");
      m.entries.push_back({*row, col, t.sign, t.var});
    }
    std::sort(m.entries.begin() + static_cast<std::ptrdiff_t>(first), m.entries.end(),
              [](const auto& a, const auto& b) { return a.row < b.row; });
    for (std::size_t e = first + 1; e < m.entries.size(); ++e) {
      if (m.entries[e].row == m.entries[e - 1].row) {
        throw CheckFailure("two differential terms landed on the same basis element");
      }
    }
  }
  return m;
}

ResolutionComplex build_resolution(const QuotientStructure& qs, const ResolutionOptions& options) {
  if (!qs.is_linear()) throw InputError("the mapping-cone resolution needs linear quotients");
  const DecompositionContext ctx(qs);
  if (options.route != GRoute::oracle && !ctx.classified()) {
    throw InputError("closed-form differentials need u, v of the linear-resolution shape");
  }
  if (options.route == GRoute::oracle) {
    const RegularityReport reg = regularity_check(ctx);
    if (!reg.regular()) throw CheckFailure("decomposition function " + reg.describe(qs));
  }
  const DecompositionTable table = build_decomposition_table(ctx, options.route);

  ResolutionComplex rc(qs);
  rc.bases = resolution_basis(qs);
  rc.reindex();
  rc.differentials.resize(rc.bases.size() - 1);
  rc.differentials[0].rows = 1;
  rc.differentials[0].cols = rc.bases[1].size();
  for (int i = 1; i + 1 < static_cast<int>(rc.bases.size()); ++i) {
    rc.differentials[static_cast<std::size_t>(i)] = differential(rc, table, i);
  }
  return rc;
}

std::vector<std::size_t> betti_numbers(const QuotientStructure& qs) {
  std::size_t max_set = 0;
  for (const auto& s : qs.sets) max_set = std::max(max_set, s.size());
  std::vector<std::size_t> b{1};
  for (std::size_t i = 1; i <= max_set + 1; ++i) {
    std::uint64_t total = 0;
    for (const auto& s : qs.sets) total += binomial(s.size(), i - 1);
    b.push_back(static_cast<std::size_t>(total));
  }
  return b;
}

bool compose_check(const ResolutionComplex& rc, int i) {
  if (i < 0) return false;
  if (i + 1 >= static_cast<int>(rc.differentials.size())) return true;
  const SparseMatrix& outer = rc.differentials[static_cast<std::size_t>(i)];
  const SparseMatrix& inner = rc.differentials[static_cast<std::size_t>(i + 1)];

  if (i == 0) {
    // d_0(d_1(f)) = sum sign * x_var * m_row must vanish as a polynomial.
    std::vector<std::size_t> start = column_starts(inner);
    for (std::size_t c = 0; c < inner.cols; ++c) {
      std::unordered_map<Monomial, int, MonomialHash> sum;
      for (std::size_t e = start[c]; e < start[c + 1]; ++e) {
        const auto& entry = inner.entries[e];
        sum[rc.power()[entry.row].times_variable(entry.var)] += entry.sign;
      }
      for (const auto& [mono, coeff] : sum) {
        if (coeff != 0) return false;
      }
    }
    return true;
  }

  const std::vector<std::size_t> outer_start = column_starts(outer);
  const std::vector<std::size_t> inner_start = column_starts(inner);
  for (std::size_t c = 0; c < inner.cols; ++c) {
    std::map<std::tuple<std::size_t, Variable, Variable>, int> sum;
    for (std::size_t e = inner_start[c]; e < inner_start[c + 1]; ++e) {
      const auto& a = inner.entries[e];
      for (std::size_t f = outer_start[a.row]; f < outer_start[a.row + 1]; ++f) {
        const auto& b = outer.entries[f];
        sum[{b.row, std::min(a.var, b.var), std::max(a.var, b.var)}] += a.sign * b.sign;
      }
    }
    for (const auto& [key, coeff] : sum) {
      if (coeff != 0) return false;
    }
  }
  return true;
}

bool minimality_check(const ResolutionComplex& rc) {
  const int n = rc.power().num_vars();
  for (std::size_t i = 1; i < rc.differentials.size(); ++i) {
    const SparseMatrix& m = rc.differentials[i];
    for (const auto& e : m.entries) {
      if (e.sign != 1 && e.sign != -1) return false;
      if (e.var < 1 || e.var > n) return false;
      if (e.row >= m.rows || e.col >= m.cols) return false;
    }
  }
  return true;
}

bool degree_homogeneity_check(const ResolutionComplex& rc) {
  for (std::size_t i = 1; i < rc.differentials.size(); ++i) {
    for (const auto& e : rc.differentials[i].entries) {
      if (rc.bases[i][e.row].degree + 1 != rc.bases[i + 1][e.col].degree) return false;
    }
  }
  return true;
}

}  // namespace lexres
