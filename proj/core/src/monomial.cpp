#include "lexres/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lexres/errors.hpp"

namespace lexres {

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw InputError("monomials live in rings with different numbers of variables (" +
                     std::to_string(a.num_vars()) + " vs " + std::to_string(b.num_vars()) + ")");
  }
}

void require_variable(int num_vars, Variable i) {
  if (i < 1 || i > num_vars) {
    throw InputError("variable index " + std::to_string(i) + " outside 1.." +
                     std::to_string(num_vars));
  }
}

}  // namespace

RingContext::RingContext(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 2) {
    throw InputError("a ring context needs at least 2 variables, got " + std::to_string(num_vars));
  }
}

Monomial::Monomial(std::vector<int> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0)) {}

Monomial Monomial::from_exponents(const RingContext& ctx, std::span<const int> exponents) {
  if (static_cast<int>(exponents.size()) != ctx.num_vars()) {
    throw InputError("exponent vector has length " + std::to_string(exponents.size()) +
                     ", ring has " + std::to_string(ctx.num_vars()) + " variables");
  }
  for (int e : exponents) {
    if (e < 0) throw InputError("negative exponent " + std::to_string(e));
  }
  return Monomial(std::vector<int>(exponents.begin(), exponents.end()));
}

Monomial Monomial::one(const RingContext& ctx) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(ctx.num_vars()), 0));
}

Monomial Monomial::variable(const RingContext& ctx, Variable i, int power) {
  require_variable(ctx.num_vars(), i);
  if (power < 0) throw InputError("negative exponent " + std::to_string(power));
  std::vector<int> e(static_cast<std::size_t>(ctx.num_vars()), 0);
  e[static_cast<std::size_t>(i - 1)] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::times_variable(Variable i) const {
  require_variable(num_vars(), i);
  std::vector<int> e = exponents_;
  ++e[static_cast<std::size_t>(i - 1)];
  return Monomial(std::move(e));
}

Monomial Monomial::over_variable(Variable i) const {
  require_variable(num_vars(), i);
  if (exponents_[static_cast<std::size_t>(i - 1)] == 0) {
    throw InputError("x" + std::to_string(i) + " does not divide " + to_string(*this));
  }
  std::vector<int> e = exponents_;
  --e[static_cast<std::size_t>(i - 1)];
  return Monomial(std::move(e));
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the exponents.
  std::size_t h = 1469598103934665603ULL;
  for (int e : exponents_) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b9U;
    h *= 1099511628211ULL;
  }
  return h;
}

std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_revlex(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  if (a.degree() != b.degree()) {
    throw InputError("revlex comparison needs equal degrees (" + std::to_string(a.degree()) +
                     " vs " + std::to_string(b.degree()) + ")");
  }
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = ea.size(); i-- > 0;) {
    // larger exponent at the last differing variable means smaller
    if (ea[i] != eb[i]) return eb[i] <=> ea[i];
  }
  return std::strong_ordering::equal;
}

void require_valid_split(int num_vars, int l) {
  if (l < 2 || l > num_vars - 1) {
    throw InputError("split index l = " + std::to_string(l) + " outside 2.." +
                     std::to_string(num_vars - 1));
  }
}

std::strong_ordering cmp_prec(const Monomial& a, const Monomial& b, int l) {
  require_same_ring(a, b);
  require_valid_split(a.num_vars(), l);
  if (a.degree() != b.degree()) {
    throw InputError("prec comparison needs equal degrees");
  }
  int bar_a = 0;
  int bar_b = 0;
  for (Variable i = 1; i <= l; ++i) {
    bar_a += a.exponent(i);
    bar_b += b.exponent(i);
  }
  if (bar_a != bar_b) return bar_a <=> bar_b;
  return cmp_lex(a, b);
}

BarTildeSplit bar_tilde_split(const Monomial& m, int l) {
  require_valid_split(m.num_vars(), l);
  const auto e = m.exponents();
  std::vector<int> bar(e.begin(), e.end());
  std::vector<int> tilde(e.size(), 0);
  for (std::size_t i = static_cast<std::size_t>(l); i < e.size(); ++i) {
    tilde[i] = bar[i];
    bar[i] = 0;
  }
  const RingContext ctx(m.num_vars());
  return {Monomial::from_exponents(ctx, bar), Monomial::from_exponents(ctx, tilde), l};
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<int> e(a.exponents().begin(), a.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
  return Monomial::from_exponents(RingContext(a.num_vars()), e);
}

std::optional<Monomial> try_divide(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<int> e(a.exponents().begin(), a.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] -= b.exponents()[i];
    if (e[i] < 0) return std::nullopt;
  }
  return Monomial::from_exponents(RingContext(a.num_vars()), e);
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<int> e(a.exponents().begin(), a.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exponents()[i]);
  return Monomial::from_exponents(RingContext(a.num_vars()), e);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<int> e(a.exponents().begin(), a.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents()[i]);
  return Monomial::from_exponents(RingContext(a.num_vars()), e);
}

Monomial power(const Monomial& m, int k) {
  if (k < 0) throw InputError("negative power");
  std::vector<int> e(m.exponents().begin(), m.exponents().end());
  for (int& x : e) x *= k;
  return Monomial::from_exponents(RingContext(m.num_vars()), e);
}

Variable min_index(const Monomial& m) {
  for (Variable i = 1; i <= m.num_vars(); ++i) {
    if (m.exponent(i) > 0) return i;
  }
  throw InputError("min(supp(m)) is undefined for m = 1");
}

Variable max_index(const Monomial& m) {
  for (Variable i = m.num_vars(); i >= 1; --i) {
    if (m.exponent(i) > 0) return i;
  }
  throw InputError("max(supp(m)) is undefined for m = 1");
}

Variable min_tilde_index(const Monomial& m, int l) {
  require_valid_split(m.num_vars(), l);
  for (Variable i = l + 1; i <= m.num_vars(); ++i) {
    if (m.exponent(i) > 0) return i;
  }
  throw InputError(to_string(m) + " has no variable with index above l = " + std::to_string(l));
}

std::vector<Variable> support(const Monomial& m) {
  std::vector<Variable> s;
  for (Variable i = 1; i <= m.num_vars(); ++i) {
    if (m.exponent(i) > 0) s.push_back(i);
  }
  return s;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (Variable i = 1; i <= m.num_vars(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    out += 'x';
    out += std::to_string(i);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

}  // namespace lexres
