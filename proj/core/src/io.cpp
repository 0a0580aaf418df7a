#include "lexres/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"
#include "lexres/errors.hpp"

namespace lexres {

using Json = nlohmann::ordered_json;

namespace {

int parse_int(std::string_view text, std::size_t& pos, std::string_view what) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) {
    throw InputError("expected " + std::string(what) + " at offset " + std::to_string(start) +
                     " in \"" + std::string(text) + "\"");
  }
  if (pos - start > 6) throw InputError(std::string(what) + " too large in \"" + std::string(text) + "\"");
  return std::stoi(std::string(text.substr(start, pos - start)));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string entry_text(int sign, Variable var) {
  return (sign < 0 ? "-x" : "x") + std::to_string(var);
}

Json monomial_json(const Monomial& m) { return Json(std::vector<int>(m.exponents().begin(), m.exponents().end())); }

Monomial monomial_from_json(const Json& j, const RingContext& ring) {
  return Monomial::from_exponents(ring, j.get<std::vector<int>>());
}

Json spec_object(const LexSegmentSpec& spec) {
  Json j;
  j["n"] = spec.num_vars;
  j["d"] = spec.degree;
  j["u"] = monomial_json(spec.u);
  j["v"] = monomial_json(spec.v);
  j["l"] = spec.l ? Json(*spec.l) : Json(nullptr);
  return j;
}

Json generators_json(const PowerIdeal& ideal) {
  Json gens = Json::array();
  for (const Monomial& m : ideal.generators()) gens.push_back(monomial_json(m));
  return gens;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Monomial parse_monomial(std::string_view text, const RingContext& ctx) {
  const std::string_view s = trim(text);
  if (s.empty()) throw InputError("empty monomial");
  if (s == "1") return Monomial::one(ctx);

  std::vector<int> exps(static_cast<std::size_t>(ctx.num_vars()), 0);
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    if (!first && s[pos] == '*') {
      ++pos;
      if (pos == s.size()) throw InputError("dangling '*' in \"" + std::string(s) + "\"");
    }
    if (s[pos] != 'x') {
      throw InputError("expected 'x' at offset " + std::to_string(pos) + " in \"" + std::string(s) + "\"");
    }
    ++pos;
    const int var = parse_int(s, pos, "variable index");
    if (var < 1 || var > ctx.num_vars()) {
      throw InputError("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(ctx.num_vars()));
    }
    int e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = parse_int(s, pos, "exponent");
      if (e == 0) throw InputError("exponent 0 in \"" + std::string(s) + "\"");
    }
    exps[static_cast<std::size_t>(var - 1)] += e;
    first = false;
  }
  return Monomial::from_exponents(ctx, exps);
}

std::string render_symbol(const BasisSymbol& b) {
  std::string out = "f({";
  for (std::size_t j = 0; j < b.sigma.size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(b.sigma[j]);
  }
  out += "};u" + std::to_string(b.gen + 1) + ")";
  return out;
}

std::string render_matrix_plain(const ResolutionComplex& rc, int i) {
  if (i < 0 || i >= static_cast<int>(rc.differentials.size())) {
    throw InputError("differential index " + std::to_string(i) + " out of range");
  }
  std::ostringstream os;
  if (i == 0) {
    const auto& gens = rc.power().generators();
    for (std::size_t j = 0; j < gens.size(); ++j) os << (j ? " " : "") << to_string(gens[j]);
    os << "\n";
    return os.str();
  }
  const SparseMatrix& m = rc.differentials[static_cast<std::size_t>(i)];
  std::vector<std::vector<std::string>> dense(m.rows, std::vector<std::string>(m.cols, "0"));
  for (const auto& e : m.entries) dense[e.row][e.col] = entry_text(e.sign, e.var);
  for (const auto& row : dense) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
    os << "\n";
  }
  return os.str();
}

std::string render_resolution_text(const ResolutionComplex& rc) {
  std::ostringstream os;
  const auto betti = rc.betti();
  const auto& gens = rc.power().generators();

  os << "generators (increasing revlex):";
  for (std::size_t j = 0; j < gens.size(); ++j) os << " u" << j + 1 << "=" << gens[j];
  os << "\n";

  os << "betti:";
  for (std::size_t b : betti) os << " " << b;
  os << "\n";

  os << "complex: 0";
  for (int i = rc.length(); i >= 1; --i) {
    os << " -> S(-" << rc.shift(i) << ")^" << betti[static_cast<std::size_t>(i)];
  }
  os << " -> S\n";

  for (int i = 1; i <= rc.length(); ++i) {
    os << "\nF_" << i << " basis:";
    for (const auto& b : rc.bases[static_cast<std::size_t>(i)]) os << " " << render_symbol(b);
    os << "\n";
  }

  for (int i = 0; i < static_cast<int>(rc.differentials.size()); ++i) {
    const SparseMatrix& m = rc.differentials[static_cast<std::size_t>(i)];
    os << "\nd_" << i << " : F_" << i + 1 << " -> F_" << i << "  (" << m.rows << " x " << m.cols << ")\n";
    if (i == 0) {
      os << render_matrix_plain(rc, 0);
      continue;
    }
    const auto& rows = rc.bases[static_cast<std::size_t>(i)];
    const auto& cols = rc.bases[static_cast<std::size_t>(i + 1)];
    std::vector<std::vector<std::string>> dense(m.rows, std::vector<std::string>(m.cols, "0"));
    for (const auto& e : m.entries) dense[e.row][e.col] = entry_text(e.sign, e.var);

    std::size_t label_width = 0;
    for (const auto& b : rows) label_width = std::max(label_width, render_symbol(b).size());
    std::vector<std::size_t> width(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) {
      width[c] = render_symbol(cols[c]).size();
      for (std::size_t r = 0; r < m.rows; ++r) width[c] = std::max(width[c], dense[r][c].size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    auto cell = [&](const std::string& s, std::size_t c) { return c + 1 == m.cols ? s : pad(s, width[c]); };
    os << std::string(label_width, ' ');
    for (std::size_t c = 0; c < m.cols; ++c) os << "  " << cell(render_symbol(cols[c]), c);
    os << "\n";
    for (std::size_t r = 0; r < m.rows; ++r) {
      os << pad(render_symbol(rows[r]), label_width);
      for (std::size_t c = 0; c < m.cols; ++c) os << "  " << cell(dense[r][c], c);
      os << "\n";
    }
  }
  return os.str();
}

std::string render_quotients_text(const QuotientStructure& qs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < qs.sets.size(); ++i) {
    os << "u" << i + 1 << " = " << qs.power[i] << "  set = {";
    for (std::size_t j = 0; j < qs.sets[i].size(); ++j) os << (j ? "," : "") << qs.sets[i][j];
    os << "}\n";
  }
  if (qs.failure) {
    os << "linear quotients FAIL at u" << qs.failure->index + 1 << ": colon generator "
       << qs.failure->colon_generator << "\n";
  } else {
    os << "linear quotients: yes\n";
  }
  return os.str();
}

std::string spec_json(const LexSegmentSpec& spec) { return dump(spec_object(spec)); }

std::string lexsegment_json(const LexSegmentSpec& spec, const std::vector<Monomial>& segment) {
  Json j = spec_object(spec);
  j["order"] = "lex-descending";
  Json list = Json::array();
  for (const Monomial& m : segment) list.push_back(monomial_json(m));
  j["lexsegment"] = std::move(list);
  return dump(j);
}

std::string classification_json(const LexSegmentSpec& spec, const NormalizedSpec& normalized,
                                 const Classification& c) {
  Json j = spec_object(spec);
  j["x1_shift"] = normalized.x1_shift;
  j["reduced_to_smaller_ring"] = normalized.reduced_to_smaller_ring;
  Json lin;
  lin["matches"] = c.linear_form.matches;
  lin["l"] = c.linear_form.matches ? Json(c.linear_form.l) : Json(nullptr);
  lin["note"] = c.linear_form.note;
  j["linear_form"] = std::move(lin);
  Json cl;
  cl["verdict"] = to_string(c.completely_lex.verdict);
  cl["checked_depth"] = c.completely_lex.checked_depth;
  cl["failing_depth"] = c.completely_lex.failing_depth ? Json(*c.completely_lex.failing_depth) : Json(nullptr);
  cl["witness"] = c.completely_lex.witness ? monomial_json(*c.completely_lex.witness) : Json(nullptr);
  j["completely_lexsegment"] = std::move(cl);
  j["notes"] = c.notes;
  return dump(j);
}

std::string power_json(const PowerIdeal& ideal) {
  Json j = spec_object(ideal.spec());
  j["k"] = ideal.k();
  j["order"] = "increasing-revlex";
  j["generators"] = generators_json(ideal);
  return dump(j);
}

std::string quotients_json(const QuotientStructure& qs) {
  Json j = spec_object(qs.power.spec());
  j["k"] = qs.power.k();
  j["order"] = "increasing-revlex";
  j["generators"] = generators_json(qs.power);
  j["sets"] = qs.sets;
  j["linear"] = qs.is_linear();
  if (qs.failure) {
    Json f;
    f["index"] = qs.failure->index;
    f["colon_generator"] = monomial_json(qs.failure->colon_generator);
    j["failure"] = std::move(f);
  } else {
    j["failure"] = nullptr;
  }
  return dump(j);
}

std::string resolution_json(const ResolutionComplex& rc) {
  Json j = spec_object(rc.power().spec());
  j["k"] = rc.power().k();
  j["order"] = "increasing-revlex";
  j["generators"] = generators_json(rc.power());
  j["sets"] = rc.quotients.sets;
  j["betti"] = rc.betti();
  std::vector<int> shifts;
  for (int i = 0; i <= rc.length(); ++i) shifts.push_back(rc.shift(i));
  j["shifts"] = shifts;

  Json bases = Json::array();
  for (std::size_t i = 1; i < rc.bases.size(); ++i) {
    Json level = Json::array();
    for (const BasisSymbol& b : rc.bases[i]) {
      Json sym;
      sym["sigma"] = b.sigma;
      sym["gen"] = b.gen;
      level.push_back(std::move(sym));
    }
    bases.push_back(std::move(level));
  }
  j["bases"] = std::move(bases);

  Json diffs = Json::array();
  for (std::size_t i = 0; i < rc.differentials.size(); ++i) {
    const SparseMatrix& m = rc.differentials[i];
    Json d;
    d["index"] = i;
    d["rows"] = m.rows;
    d["cols"] = m.cols;
    Json entries = Json::array();
    for (const auto& e : m.entries) {
      Json ej;
      ej["r"] = e.row;
      ej["c"] = e.col;
      ej["sign"] = e.sign;
      ej["var"] = e.var;
      entries.push_back(std::move(ej));
    }
    d["entries"] = std::move(entries);
    diffs.push_back(std::move(d));
  }
  j["differentials"] = std::move(diffs);
  return dump(j);
}

ResolutionComplex resolution_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
    const RingContext ring(j.at("n").get<int>());
    LexSegmentSpec spec = make_spec(monomial_from_json(j.at("u"), ring), monomial_from_json(j.at("v"), ring));
    if (!j.at("l").is_null()) spec.l = j.at("l").get<int>();

    std::vector<Monomial> gens;
    for (const auto& g : j.at("generators")) gens.push_back(monomial_from_json(g, ring));
    PowerIdeal ideal(spec, j.at("k").get<int>(), std::move(gens));

    QuotientStructure qs{std::move(ideal), j.at("sets").get<std::vector<std::vector<Variable>>>(), std::nullopt};
    if (qs.sets.size() != qs.power.size()) throw InputError("sets and generators differ in length");

    ResolutionComplex rc(std::move(qs));
    const int base = rc.power().generator_degree();
    rc.bases.emplace_back();
    for (const auto& level : j.at("bases")) {
      std::vector<BasisSymbol> symbols;
      for (const auto& sym : level) {
        BasisSymbol b;
        b.sigma = sym.at("sigma").get<std::vector<Variable>>();
        b.gen = sym.at("gen").get<std::size_t>();
        b.degree = base + static_cast<int>(b.sigma.size());
        symbols.push_back(std::move(b));
      }
      rc.bases.push_back(std::move(symbols));
    }
    for (const auto& d : j.at("differentials")) {
      SparseMatrix m;
      m.rows = d.at("rows").get<std::size_t>();
      m.cols = d.at("cols").get<std::size_t>();
      for (const auto& e : d.at("entries")) {
        m.entries.push_back({e.at("r").get<std::size_t>(), e.at("c").get<std::size_t>(),
                             e.at("sign").get<int>(), e.at("var").get<Variable>()});
      }
      rc.differentials.push_back(std::move(m));
    }
    rc.reindex();
    return rc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed resolution JSON: ") + e.what());
  }
}

std::string render_monomial_m2(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (Variable i = 1; i <= m.num_vars(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string macaulay2_script(const PowerIdeal& ideal,
                             const std::optional<std::vector<std::size_t>>& expected_betti) {
  std::ostringstream os;
  os << "-- G(I^" << ideal.k() << ") for I = (L(" << ideal.spec().u << ", " << ideal.spec().v
     << ")), increasing revlex order\n";
  os << "R = QQ[";
  for (int i = 1; i <= ideal.num_vars(); ++i) os << (i > 1 ? "," : "") << "x" << i;
  os << "];\n";
  os << "I = ideal(";
  const auto& gens = ideal.generators();
  for (std::size_t j = 0; j < gens.size(); ++j) os << (j ? ", " : "") << render_monomial_m2(gens[j]);
  os << ");\n";
  os << "C = res I;\n";
  os << "betti C\n";
  if (expected_betti) {
    os << "-- expected total Betti numbers of R/I:";
    for (std::size_t b : *expected_betti) os << " " << b;
    os << "\n";
  }
  return os.str();
}

}  // namespace lexres
