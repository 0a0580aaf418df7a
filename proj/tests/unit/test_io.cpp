#include <gtest/gtest.h>

#include <random>

#include "lexres/lexres.hpp"
#include "oracles.hpp"

namespace lexres {
namespace {

const RingContext R4(4);

std::vector<int> exps(const Monomial& m) { return {m.exponents().begin(), m.exponents().end()}; }

TEST(Parse, Examples) {
  EXPECT_EQ(exps(parse_monomial("x1x3", R4)), (std::vector<int>{1, 0, 1, 0}));
  EXPECT_EQ(exps(parse_monomial("x2^2", R4)), (std::vector<int>{0, 2, 0, 0}));
  EXPECT_EQ(exps(parse_monomial("1", R4)), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(parse_monomial("x1*x3", R4), parse_monomial("x1x3", R4));
  EXPECT_EQ(parse_monomial("x1x1", R4), parse_monomial("x1^2", R4));
  EXPECT_EQ(parse_monomial(" x4^3*x2 ", R4), parse_monomial("x2x4^3", R4));
  EXPECT_EQ(parse_monomial("x12", RingContext(12)).exponent(12), 1);
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "x5", "x0", "x1^0", "y1", "x1*", "*x1", "x1^", "x", "x1 x2", "2", "x1^-1"}) {
    EXPECT_THROW(parse_monomial(bad, R4), InputError) << '"' << bad << '"';
  }
}

TEST(Render, RoundTrip) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Monomial m = testing::random_monomial(rng, n, static_cast<int>(rng() % 7));
    EXPECT_EQ(parse_monomial(to_string(m), RingContext(n)), m);
    EXPECT_EQ(parse_monomial(render_monomial_m2(m), RingContext(n)), m);
  }
}

TEST(Render, Symbols) {
  EXPECT_EQ(render_symbol({{2, 4}, 3, 4}), "f({2,4};u4)");
  EXPECT_EQ(render_symbol({{}, 0, 2}), "f({};u1)");
}

TEST(Render, TextReports) {
  const auto rc = testing::resolve(testing::reference_spec(), 1);
  const std::string text = render_resolution_text(rc);
  EXPECT_NE(text.find("f({3,4};u5)"), std::string::npos);
  EXPECT_NE(text.find("-x3"), std::string::npos);
  const std::string sets = render_quotients_text(rc.quotients);
  EXPECT_NE(sets.find("{2,4}"), std::string::npos);
  EXPECT_NE(sets.find("x2^2"), std::string::npos);
}

TEST(Json, ResolutionRoundTrip) {
  for (int k = 1; k <= 2; ++k) {
    const auto rc = testing::resolve(testing::reference_spec(), k);
    const std::string text = resolution_json(rc);
    const auto back = resolution_from_json(text);
    EXPECT_EQ(back, rc);
    EXPECT_EQ(resolution_json(back), text);
    EXPECT_EQ(back.position(std::vector<Variable>{}, 0), 0u);
  }
}

TEST(Json, KeyOrder) {
  const auto rc = testing::resolve(testing::reference_spec(), 1);
  const std::string text = resolution_json(rc);
  std::size_t last = 0;
  for (const char* key : {"\"n\"", "\"d\"", "\"u\"", "\"v\"", "\"l\"", "\"k\"", "\"order\"", "\"generators\"",
                          "\"sets\"", "\"betti\"", "\"shifts\"", "\"bases\"", "\"differentials\""}) {
    const auto pos = text.find(key);
    ASSERT_NE(pos, std::string::npos) << key;
    EXPECT_GT(pos, last) << key;
    last = pos;
  }
  EXPECT_NE(text.find("increasing-revlex"), std::string::npos);
}

TEST(Json, MalformedInputIsInputError) {
  EXPECT_THROW(resolution_from_json("{"), InputError);
  EXPECT_THROW(resolution_from_json("{\"n\": 4}"), InputError);
}

TEST(Json, OtherEmitters) {
  const auto spec = testing::reference_spec();
  EXPECT_NE(spec_json(spec).find("\"l\": 2"), std::string::npos);
  const auto seg = enumerate_lexsegment(spec);
  EXPECT_NE(lexsegment_json(spec, seg).find("[\n"), std::string::npos);
  const auto p = power_generators(spec, 1);
  EXPECT_NE(power_json(p).find("generators"), std::string::npos);
  EXPECT_NE(quotients_json(linear_quotients_check(p)).find("sets"), std::string::npos);
  const auto norm = normalize_spec(spec.u, spec.v);
  EXPECT_NE(classification_json(spec, norm, classify(spec, {2, false})).find("unknown-at-depth"),
            std::string::npos);
}

TEST(Macaulay2, Script) {
  const auto p = power_generators(testing::reference_spec(), 1);
  const std::string script = macaulay2_script(p, std::vector<std::size_t>{1, 5, 6, 2});
  EXPECT_NE(script.find("R = QQ[x1,x2,x3,x4];"), std::string::npos);
  EXPECT_NE(script.find("I = ideal(x2*x4, x1*x4, x2*x3, x1*x3, x2^2);"), std::string::npos);
  EXPECT_NE(script.find("betti C"), std::string::npos);
  EXPECT_NE(script.find("1 5 6 2"), std::string::npos);
}

}  // namespace
}  // namespace lexres
