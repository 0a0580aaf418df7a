// lexres: lexsegment ideals, their powers and linear resolutions from the command line.
//
// Exit codes: 0 success, 1 check failure, 2 input error, 3 budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lexres/lexres.hpp"

namespace {

using namespace lexres;
using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kCheckFailure = 1, kInputError = 2, kBudget = 3 };

struct Job {
  std::string command;
  int n = 0;
  std::string u;
  std::string v;
  int k = 1;
  int depth = 0;
  std::uint64_t seed = 1;
  int trials = 5;
  std::string format;
  std::string out;
  bool oracle_g = false;
  bool first_shadow_persistence = false;
  std::uint64_t budget = kDefaultProductBudget;
};

struct Prepared {
  LexSegmentSpec original;
  NormalizedSpec normalized;
  Classification classification;
  LexSegmentSpec working;  // normalized, with l when the linear form matches
};

Prepared prepare(const Job& job) {
  if (job.k < 1) throw InputError("--k must be >= 1");
  if (job.depth < 0) throw InputError("--depth must be >= 0");
  const RingContext ring(job.n);
  Prepared p;
  p.original = make_spec(parse_monomial(job.u, ring), parse_monomial(job.v, ring));
  const CompletelyLexOptions opts{job.depth, job.first_shadow_persistence};

  if (p.original.u.exponent(1) > 0) {
    p.normalized = normalize_spec(p.original.u, p.original.v);
  } else {
    p.normalized = {p.original, 0, false};
  }
  const LexSegmentSpec& spec = p.normalized.spec;
  if (spec.u.exponent(1) > 0 && spec.v.exponent(1) == 0) {
    p.classification = classify(spec, opts);
    p.working = with_split(spec);
  } else {
    p.classification.completely_lex = is_completely_lexsegment(spec, opts);
    p.classification.linear_form.note =
        p.normalized.reduced_to_smaller_ring ? "common x1 power removed; segment lives on x2..xn" : "x1 does not divide u";
    p.classification.notes = p.classification.linear_form.note;
    p.working = spec;
  }
  return p;
}

void require_format(const Job& job, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (job.format == f) return;
  }
  throw InputError("format '" + job.format + "' is not available for '" + job.command + "'");
}

std::string classification_text(const Prepared& p) {
  std::ostringstream os;
  const auto& s = p.working;
  const auto& c = p.classification;
  os << "segment: L(" << p.original.u << ", " << p.original.v << ") in " << p.original.num_vars
     << " variables, degree " << p.original.degree << "\n";
  os << "normalized: L(" << s.u << ", " << s.v << "), x1 shift " << p.normalized.x1_shift;
  if (p.normalized.reduced_to_smaller_ring) os << ", reduced to a smaller ring";
  os << "\n";
  if (c.linear_form.matches) {
    os << "linear form: yes (l = " << c.linear_form.l << ")\n";
  } else {
    os << "linear form: no (" << c.linear_form.note << ")\n";
  }
  os << "completely lexsegment: " << to_string(c.completely_lex.verdict) << " (checked depth "
     << c.completely_lex.checked_depth;
  if (c.completely_lex.failing_depth) {
    os << ", Shad^" << *c.completely_lex.failing_depth << " misses " << *c.completely_lex.witness;
  }
  os << ")\n";
  return os.str();
}

std::string power_text(const PowerIdeal& p) {
  std::ostringstream os;
  os << "G(I^" << p.k() << "): " << p.size() << " generators of degree " << p.generator_degree()
     << ", increasing revlex\n";
  for (std::size_t i = 0; i < p.size(); ++i) os << "u" << i + 1 << " = " << p[i] << "\n";
  return os.str();
}

Json monomial_array(const Monomial& m) { return Json(std::vector<int>(m.exponents().begin(), m.exponents().end())); }

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

QuotientStructure linear_quotients_or_fail(const Prepared& p, const Job& job) {
  auto qs = linear_quotients_check(power_generators(p.working, job.k, job.budget));
  if (!qs.is_linear()) {
    throw CheckFailure("G(I^" + std::to_string(job.k) + ") has no linear quotients in increasing revlex order: u" +
                       std::to_string(qs.failure->index + 1) + " has colon generator " +
                       to_string(qs.failure->colon_generator));
  }
  return qs;
}

ResolutionComplex resolve(const Prepared& p, const Job& job) {
  const auto qs = linear_quotients_or_fail(p, job);
  if (job.oracle_g) return build_resolution(qs, {GRoute::oracle});
  if (!p.working.l) {
    throw InputError("L(" + to_string(p.working.u) + ", " + to_string(p.working.v) +
                     ") is not of the linear-resolution shape; pass --oracle-g to use the general construction");
  }
  return build_resolution(qs, {GRoute::closed_form_verified});
}

std::string render_resolution(const ResolutionComplex& rc, const std::string& format) {
  if (format == "json") return resolution_json(rc);
  if (format == "m2") return macaulay2_script(rc.power(), rc.betti());
  return render_resolution_text(rc);
}

int run_verify(const Prepared& p, const Job& job, std::string& output) {
  require_format(job, {"text", "json"});
  std::vector<Check> checks;
  const auto qs = linear_quotients_or_fail(p, job);
  checks.push_back({"linear_quotients", true, std::to_string(qs.power.size()) + " generators"});

  const auto lemma = check_set_lemmas(qs);
  checks.push_back({"set_lemmas", !lemma.has_value(),
                    lemma ? lemma->lemma + " fails at u" + std::to_string(lemma->index + 1) + ", s = " +
                                std::to_string(lemma->s)
                          : "setmin" + std::string(p.working.l ? " and setmin2" : "")});

  const DecompositionContext ctx(qs);
  const auto reg = regularity_check(ctx);
  checks.push_back({"oracle_g", reg.regular(),
                    reg.regular() ? (ctx.classified() ? "closed form = oracle, g regular" : "oracle g regular")
                                  : reg.describe(qs)});

  bool any_failed = !reg.regular() || lemma.has_value();
  std::optional<RankReport> rank;
  bool budget_hit = false;
  if (reg.regular()) {
    const GRoute route = p.working.l && !job.oracle_g ? GRoute::closed_form_verified : GRoute::oracle;
    const auto rc = build_resolution(qs, {route});
    bool compose = true;
    for (int i = 0; i <= rc.length(); ++i) compose = compose && compose_check(rc, i);
    checks.push_back({"compose", compose, "d_i . d_(i+1) = 0 for i = 0.." + std::to_string(rc.length())});
    checks.push_back({"minimality", minimality_check(rc), "entries are +-x_j"});
    checks.push_back({"degree_homogeneity", degree_homogeneity_check(rc), "linear shifts"});
    checks.push_back({"betti_count", betti_numbers(qs) == rc.betti(), "basis counts = binomial sums"});
    try {
      const bool ok = euler_check(rc);
      checks.push_back({"euler", ok, "N(t) = " + to_string(hilbert_numerator(rc.power().generators()))});
    } catch (const BudgetExceeded& e) {
      checks.push_back({"euler", false, std::string("skipped: ") + e.what()});
      budget_hit = true;
    }
    rank = random_rank_check(rc, job.seed, job.trials);
    checks.push_back({"rank", rank->passed,
                      std::to_string(job.trials) + " random evaluations; necessary condition for exactness only"});
  }
  for (const auto& c : checks) any_failed = any_failed || !c.passed;

  if (job.format == "json") {
    Json j;
    j["n"] = p.working.num_vars;
    j["d"] = p.working.degree;
    j["u"] = monomial_array(p.working.u);
    j["v"] = monomial_array(p.working.v);
    j["l"] = p.working.l ? Json(*p.working.l) : Json(nullptr);
    j["k"] = job.k;
    Json list = Json::array();
    for (const auto& c : checks) {
      Json cj;
      cj["name"] = c.name;
      cj["passed"] = c.passed;
      cj["detail"] = c.detail;
      list.push_back(std::move(cj));
    }
    j["checks"] = std::move(list);
    if (rank) {
      Json r;
      r["seed"] = rank->seed;
      r["modulus"] = rank->modulus;
      r["note"] = "necessary condition for exactness only";
      Json trials = Json::array();
      for (const auto& t : rank->trials) {
        Json tj;
        tj["point"] = t.point;
        tj["ranks"] = t.ranks;
        tj["exact_at"] = t.exact_at;
        tj["passed"] = t.passed;
        trials.push_back(std::move(tj));
      }
      r["trials"] = std::move(trials);
      j["rank"] = std::move(r);
    } else {
      j["rank"] = nullptr;
    }
    j["passed"] = !any_failed;
    output = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& c : checks) os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    if (rank) {
      for (std::size_t t = 0; t < rank->trials.size(); ++t) {
        os << "rank trial " << t + 1 << ": ranks";
        for (auto r : rank->trials[t].ranks) os << " " << r;
        os << "\n";
      }
    }
    os << (any_failed ? "verify: FAIL\n" : "verify: all checks passed\n");
    output = os.str();
  }
  if (budget_hit) return kBudget;
  return any_failed ? kCheckFailure : kOk;
}

int run(const Job& job, std::string& output) {
  const Prepared p = prepare(job);
  if (job.command == "gen") {
    require_format(job, {"text", "json"});
    const auto seg = enumerate_lexsegment(p.original);
    if (job.format == "json") {
      output = lexsegment_json(p.original, seg);
    } else {
      for (const auto& m : seg) output += to_string(m) + "\n";
    }
    return kOk;
  }
  if (job.command == "classify") {
    require_format(job, {"text", "json"});
    output = job.format == "json" ? classification_json(p.working, p.normalized, p.classification)
                                  : classification_text(p);
    return kOk;
  }
  if (job.command == "power") {
    const auto power = power_generators(p.working, job.k, job.budget);
    if (job.format == "json") {
      output = power_json(power);
    } else if (job.format == "m2") {
      output = macaulay2_script(power);
    } else {
      output = power_text(power);
    }
    return kOk;
  }
  if (job.command == "quotients") {
    require_format(job, {"text", "json"});
    const auto qs = linear_quotients_check(power_generators(p.working, job.k, job.budget));
    output = job.format == "json" ? quotients_json(qs) : render_quotients_text(qs);
    return qs.is_linear() ? kOk : kCheckFailure;
  }
  if (job.command == "resolve" || job.command == "export") {
    output = render_resolution(resolve(p, job), job.format);
    return kOk;
  }
  if (job.command == "verify") return run_verify(p, job, output);
  throw InputError("unknown command " + job.command);
}

void add_common(CLI::App* sub, Job& job, const std::string& default_format) {
  sub->add_option("--n", job.n, "number of variables")->required();
  sub->add_option("--u", job.u, "lex-larger endpoint, e.g. x1x3")->required();
  sub->add_option("--v", job.v, "lex-smaller endpoint, e.g. x2x4")->required();
  sub->add_option("--k", job.k, "power of the ideal")->capture_default_str();
  sub->add_option("--depth", job.depth, "iterated shadows to enumerate (0 = n)")->capture_default_str();
  sub->add_option("--seed", job.seed, "seed for random evaluations")->capture_default_str();
  sub->add_option("--trials", job.trials, "random evaluations for the rank check")->capture_default_str();
  sub->add_option("--format", job.format, "json | text | m2")
      ->check(CLI::IsMember({"json", "text", "m2"}))
      ->default_str(default_format);
  sub->add_option("--out", job.out, "write output to this file instead of stdout");
  sub->add_option("--budget", job.budget, "maximum number of k-fold products")->capture_default_str();
  sub->add_flag("--oracle-g", job.oracle_g, "use the linear-scan decomposition function");
  sub->add_flag("--first-shadow-persistence", job.first_shadow_persistence,
                "report 'yes' when every enumerated shadow is a lexsegment set");
  sub->callback([&job, sub, default_format] {
    job.command = sub->get_name();
    if (job.format.empty()) job.format = default_format;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexsegment ideals: powers, linear quotients and minimal free resolutions"};
  app.require_subcommand(1);
  Job job;
  add_common(app.add_subcommand("gen", "print the lexsegment L(u, v)"), job, "text");
  add_common(app.add_subcommand("classify", "linear-resolution shape and completely-lexsegment check"), job, "text");
  add_common(app.add_subcommand("power", "minimal generators of I^k"), job, "text");
  add_common(app.add_subcommand("quotients", "linear quotients of I^k and the sets set(m)"), job, "text");
  add_common(app.add_subcommand("resolve", "minimal graded free resolution of S/I^k"), job, "text");
  add_common(app.add_subcommand("verify", "run every consistency check on the resolution"), job, "text");
  add_common(app.add_subcommand("export", "export the resolution"), job, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  std::string output;
  int code = kOk;
  try {
    code = run(job, output);
  } catch (const InputError& e) {
    std::cerr << "lexres: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "lexres: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const CheckFailure& e) {
    std::cerr << "lexres: check failed: " << e.what() << "\n";
    return kCheckFailure;
  }

  if (job.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(job.out, std::ios::binary);
    if (!f) {
      std::cerr << "lexres: cannot write " << job.out << "\n";
      return kInputError;
    }
    f << output;
  }
  return code;
}
