#include "lexres/decomposition.hpp"

#include <algorithm>
#include <sstream>

namespace lexres {

DecompositionContext::DecompositionContext(const QuotientStructure& qs) : qs_(&qs) {
  const auto& spec = qs.power.spec();
  if (spec.l) vk_ = power(spec.v, qs.power.k());
}

const Monomial& DecompositionContext::vk() const {
  if (!vk_) throw InputError("the closed-form decomposition needs a classified spec (l unknown)");
  return *vk_;
}

DecompositionRecord g_closed_form(const DecompositionContext& ctx, std::size_t m_index,
                                  Variable s) {
  const QuotientStructure& qs = ctx.quotients();
  const Monomial& vk = ctx.vk();
  const int l = *ctx.l();
  if (m_index >= qs.power.size()) throw InputError("generator index out of range");
  if (!qs.in_set(m_index, s)) {
    throw InputError(std::to_string(s) + " is not in set(" + to_string(qs.power[m_index]) + ")");
  }
  const Monomial& m = qs.power[m_index];
  const Monomial xs_m = m.times_variable(s);

  DecompositionRecord rec;
  rec.m_index = m_index;
  rec.s = s;
  const Variable lo = min_index(m);
  Monomial candidate = xs_m.over_variable(lo);
  if (cmp_prec(candidate, vk, l) >= 0) {
    rec.branch = Branch::high;
    rec.coefficient = lo;
  } else {
    rec.branch = Branch::low;
    rec.coefficient = min_tilde_index(m, l);
    candidate = xs_m.over_variable(rec.coefficient);
  }
  const auto pos = qs.power.position(candidate);
  if (!pos) {
    throw CheckFailure("closed-form g(x" + std::to_string(s) + "*" + to_string(m) + ") = " +
                       to_string(candidate) + " is not a generator of I^k");
  }
  rec.g_value = std::move(candidate);
  rec.g_index = *pos;
  return rec;
}

std::size_t g_oracle_index(const QuotientStructure& qs, const Monomial& x) {
  const auto& gens = qs.power.generators();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].divides(x)) return j;
  }
  throw InputError(to_string(x) + " is not in the ideal");
}

Monomial g_oracle(const QuotientStructure& qs, const Monomial& x) {
  return qs.power[g_oracle_index(qs, x)];
}

namespace {

std::string mismatch_message(const DecompositionRecord& rec, std::size_t oracle_index) {
  std::ostringstream os;
  os << "decomposition mismatch at generator #" << rec.m_index << ", s = " << rec.s
     << ": closed form gives #" << rec.g_index << " (" << rec.g_value << "), oracle gives #"
     << oracle_index;
  return os.str();
}

DecompositionRecord oracle_record(const QuotientStructure& qs, std::size_t i, Variable s) {
  const Monomial xs_m = qs.power[i].times_variable(s);
  DecompositionRecord rec;
  rec.m_index = i;
  rec.s = s;
  rec.g_index = g_oracle_index(qs, xs_m);
  rec.g_value = qs.power[rec.g_index];
  const Monomial coeff = *try_divide(xs_m, rec.g_value);
  rec.coefficient = min_index(coeff);
  // The branch label only has meaning for classified specs; infer it from the coefficient.
  rec.branch = rec.coefficient == min_index(qs.power[i]) ? Branch::high : Branch::low;
  return rec;
}

}  // namespace

DecompositionMismatch::DecompositionMismatch(DecompositionRecord closed_form,
                                             std::size_t oracle_index)
    : CheckFailure(mismatch_message(closed_form, oracle_index)),
      closed_form_(std::move(closed_form)),
      oracle_index_(oracle_index) {}

DecompositionTable build_decomposition_table(const DecompositionContext& ctx, GRoute route) {
  const QuotientStructure& qs = ctx.quotients();
  if (!qs.is_linear()) throw InputError("decomposition needs linear quotients");
  DecompositionTable table(qs.sets.size());
  for (std::size_t i = 0; i < qs.sets.size(); ++i) {
    table[i].reserve(qs.sets[i].size());
    for (Variable s : qs.sets[i]) {
      if (route == GRoute::oracle) {
        table[i].push_back(oracle_record(qs, i, s));
        continue;
      }
      DecompositionRecord rec = g_closed_form(ctx, i, s);
      if (route == GRoute::closed_form_verified) {
        const std::size_t oracle = g_oracle_index(qs, qs.power[i].times_variable(s));
        if (oracle != rec.g_index) throw DecompositionMismatch(rec, oracle);
      }
      table[i].push_back(std::move(rec));
    }
  }
  return table;
}

RegularityReport regularity_check(const DecompositionContext& ctx) {
  const QuotientStructure& qs = ctx.quotients();
  RegularityReport report;
  for (std::size_t i = 0; i < qs.sets.size(); ++i) {
    const auto& set_m = qs.sets[i];
    for (Variable s : set_m) {
      const std::size_t g = g_oracle_index(qs, qs.power[i].times_variable(s));
      if (ctx.classified()) {
        const DecompositionRecord rec = g_closed_form(ctx, i, s);
        if (rec.g_index != g) {
          report.kind = RegularityReport::Kind::closed_form_mismatch;
          report.m_index = i;
          report.s = s;
          report.closed_form_index = rec.g_index;
          report.oracle_index = g;
          return report;
        }
      }
      for (Variable t : qs.sets[g]) {
        if (!std::binary_search(set_m.begin(), set_m.end(), t)) {
          report.kind = RegularityReport::Kind::violation;
          report.m_index = i;
          report.s = s;
          report.t = t;
          return report;
        }
      }
    }
  }
  return report;
}

std::string RegularityReport::describe(const QuotientStructure& qs) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::regular:
      os << "regular";
      break;
    case Kind::violation:
      os << "not regular: t = " << t << " lies in set(g(x" << s << "*" << qs.power[m_index]
         << ")) but not in set(" << qs.power[m_index] << ")";
      break;
    case Kind::closed_form_mismatch:
      os << "closed form disagrees with oracle at m = " << qs.power[m_index] << ", s = " << s
         << ": " << qs.power[closed_form_index] << " vs " << qs.power[oracle_index];
      break;
  }
  return os.str();
}

}  // namespace lexres
