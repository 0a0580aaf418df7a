#include <gtest/gtest.h>

#include <random>

#include "lexres/lexres.hpp"
#include "oracles.hpp"

namespace lexres {
namespace {

const RingContext R4(4);
Monomial m4(const char* text) { return parse_monomial(text, R4); }

using Sets = std::vector<std::vector<Variable>>;

TEST(Colon, Examples) {
  const auto p = power_generators(testing::reference_spec(), 1);
  const auto& g = p.generators();
  EXPECT_EQ(colon_minimal_generators(std::span(g).first(3), g[3]),
            (std::vector<Monomial>{m4("x2"), m4("x4")}));
  EXPECT_EQ(colon_minimal_generators(std::span(g).first(1), g[1]), (std::vector<Monomial>{m4("x2")}));
  EXPECT_TRUE(colon_minimal_generators({}, g[0]).empty());
}

TEST(Quotients, FirstPowerSets) {
  const auto qs = linear_quotients_check(power_generators(testing::reference_spec(), 1));
  EXPECT_TRUE(qs.is_linear());
  EXPECT_EQ(qs.sets, (Sets{{}, {2}, {4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(set_cardinality_profile(qs), (std::vector<int>{0, 1, 1, 2, 2}));
  EXPECT_TRUE(qs.in_set(3, 4));
  EXPECT_FALSE(qs.in_set(3, 3));
  const std::vector<Variable> sigma{3, 4};
  EXPECT_TRUE(qs.contains_subset(4, sigma));
  EXPECT_FALSE(qs.contains_subset(3, sigma));
}

TEST(Quotients, SquareIsLinearAndSatisfiesLemmas) {
  const auto qs = linear_quotients_check(power_generators(testing::reference_spec(), 2));
  EXPECT_TRUE(qs.is_linear());
  EXPECT_EQ(set_cardinality_profile(qs).size(), 14u);
  EXPECT_FALSE(check_set_lemmas(qs).has_value());
}

TEST(Quotients, SingleGenerator) {
  const RingContext ring(3);
  const Monomial u = parse_monomial("x1x2", ring);
  const auto qs = linear_quotients_check(power_generators(make_spec(u, u), 3));
  EXPECT_TRUE(qs.is_linear());
  EXPECT_EQ(qs.sets, (Sets{{}}));
  EXPECT_EQ(set_cardinality_profile(qs), (std::vector<int>{0}));
}

TEST(Quotients, FailureIsReportedAsData) {
  // (x3x4) : (x1x2) = (x3x4) is not generated by variables.
  const PowerIdeal ideal(testing::reference_spec(), 1, {m4("x3x4"), m4("x1x2")});
  const auto qs = linear_quotients_check(ideal);
  ASSERT_FALSE(qs.is_linear());
  EXPECT_EQ(qs.failure->index, 1u);
  EXPECT_EQ(qs.failure->colon_generator, m4("x3x4"));
  EXPECT_THROW(set_cardinality_profile(qs), InputError);
}

// s in set(m) iff x_s m = x_t w for an earlier generator w; then s > t and x_t | m.
TEST(Quotients, SetMembershipByWitnessSearch) {
  for (const auto& f : testing::linear_form_family(3, 5, 2, 3)) {
    for (int k = 1; k <= 2; ++k) {
      const auto qs = linear_quotients_check(power_generators(testing::classified_spec(f), k));
      ASSERT_TRUE(qs.is_linear()) << f.label();
      const auto& g = qs.power.generators();
      const int n = f.n;
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (Variable s = 1; s <= n; ++s) {
          bool witnessed = false;
          for (std::size_t j = 0; j < i && !witnessed; ++j) {
            for (Variable t = 1; t <= n; ++t) {
              if (g[i].times_variable(s) == g[j].times_variable(t)) {
                witnessed = true;
                EXPECT_GT(s, t);
                EXPECT_GT(g[i].exponent(t), 0);
              }
            }
          }
          EXPECT_EQ(qs.in_set(i, s), witnessed) << f.label() << " k=" << k << " i=" << i << " s=" << s;
        }
      }
    }
  }
}

TEST(Quotients, LemmasHoldOnFamily) {
  for (const auto& f : testing::linear_form_family(3, 6, 2, 3)) {
    for (int k = 1; k <= 2; ++k) {
      const auto qs = linear_quotients_check(power_generators(testing::classified_spec(f), k));
      ASSERT_TRUE(qs.is_linear()) << f.label();
      const auto violation = check_set_lemmas(qs);
      EXPECT_FALSE(violation.has_value()) << f.label() << " " << (violation ? violation->lemma : "");
    }
  }
}

// z in (prefix) : (m)  iff  z m in (prefix), checked against the computed colon generators.
TEST(Quotients, ColonMembershipBothWays) {
  std::mt19937_64 rng(2024);
  for (const auto& f : testing::linear_form_family(3, 5, 2, 3)) {
    const auto p = power_generators(testing::classified_spec(f), 2);
    const auto& g = p.generators();
    for (int probe = 0; probe < 200; ++probe) {
      const std::size_t i = rng() % g.size();
      const Monomial z = testing::random_monomial(rng, f.n, static_cast<int>(rng() % 4));
      const auto prefix = std::span(g).first(i);
      const auto colon = colon_minimal_generators(prefix, g[i]);
      const bool via_colon = std::any_of(colon.begin(), colon.end(), [&](const Monomial& c) { return c.divides(z); });
      const Monomial zm = multiply(z, g[i]);
      const bool via_product = std::any_of(prefix.begin(), prefix.end(), [&](const Monomial& w) { return w.divides(zm); });
      EXPECT_EQ(via_colon, via_product) << f.label() << " z=" << z << " m=" << g[i];
    }
  }
}

}  // namespace
}  // namespace lexres
