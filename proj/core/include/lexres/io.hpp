#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexres/decomposition.hpp"
#include "lexres/lexsegment.hpp"
#include "lexres/monomial.hpp"
#include "lexres/powers.hpp"
#include "lexres/quotients.hpp"
#include "lexres/resolution.hpp"
#include "lexres/verify.hpp"

namespace lexres {

/// Parses  monomial := "1" | factor ( "*"? factor )* ,  factor := "x" INT ( "^" INT )?
/// Repeated factors accumulate ("x1x1" == "x1^2"). Throws InputError.
Monomial parse_monomial(std::string_view text, const RingContext& ctx);

// ---- text ----------------------------------------------------------------

/// d_0 as a single row of generators, d_i (i >= 1) as dense rows of "x1", "-x3", "0"
/// separated by one space, one line per codomain basis element.
std::string render_matrix_plain(const ResolutionComplex& rc, int i);

/// "f({2,4};u4)" with 1-based generator labels.
std::string render_symbol(const BasisSymbol& b);

std::string render_resolution_text(const ResolutionComplex& rc);
std::string render_quotients_text(const QuotientStructure& qs);

// ---- JSON (UTF-8, keys in fixed order) ------------------------------------
//
// Monomials are exponent arrays. "gen", "r", "c" are 0-based positions; "sigma" and "var"
// hold 1-based variable indices.

std::string spec_json(const LexSegmentSpec& spec);
std::string lexsegment_json(const LexSegmentSpec& spec, const std::vector<Monomial>& segment);
std::string classification_json(const LexSegmentSpec& spec, const NormalizedSpec& normalized,
                                 const Classification& c);
std::string power_json(const PowerIdeal& ideal);
std::string quotients_json(const QuotientStructure& qs);
std::string resolution_json(const ResolutionComplex& rc);

/// Inverse of resolution_json.
ResolutionComplex resolution_from_json(std::string_view text);

// ---- Macaulay2 --------------------------------------------------------------

/// A script declaring the ring, the ideal of G(I^k) and a Betti-table command.
std::string macaulay2_script(const PowerIdeal& ideal,
                             const std::optional<std::vector<std::size_t>>& expected_betti = std::nullopt);

/// "x1*x3", "x2^2", "1"
std::string render_monomial_m2(const Monomial& m);

}  // namespace lexres
