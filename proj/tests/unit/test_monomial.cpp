#include <gtest/gtest.h>

#include <random>

#include "lexres/errors.hpp"
#include "lexres/io.hpp"
#include "lexres/monomial.hpp"
#include "oracles.hpp"

namespace lexres {
namespace {

const RingContext R4(4);

Monomial m4(const char* text) { return parse_monomial(text, R4); }

TEST(RingContext, RejectsFewerThanTwoVariables) {
  EXPECT_THROW(RingContext(1), InputError);
  EXPECT_NO_THROW(RingContext(2));
}

TEST(Monomial, FromExponents) {
  const std::vector<int> e{1, 0, 1, 0};
  const Monomial x1x3 = Monomial::from_exponents(R4, e);
  EXPECT_EQ(x1x3.degree(), 2);
  EXPECT_EQ(to_string(x1x3), "x1x3");

  const std::vector<int> zero{0, 0, 0, 0};
  const Monomial one = Monomial::from_exponents(R4, zero);
  EXPECT_TRUE(one.is_one());
  EXPECT_EQ(one.degree(), 0);

  const std::vector<int> sq{0, 2, 0, 0};
  EXPECT_EQ(to_string(Monomial::from_exponents(R4, sq)), "x2^2");
  EXPECT_EQ(Monomial::from_exponents(R4, sq).degree(), 2);
}

TEST(Monomial, FromExponentsErrors) {
  const std::vector<int> short_vec{1, 0, 1};
  const std::vector<int> negative{1, -1, 0, 0};
  EXPECT_THROW(Monomial::from_exponents(R4, short_vec), InputError);
  EXPECT_THROW(Monomial::from_exponents(R4, negative), InputError);
}

TEST(Orders, LexExamples) {
  EXPECT_TRUE(cmp_lex(m4("x1x3"), m4("x2x4")) > 0);
  EXPECT_TRUE(cmp_lex(m4("x2^2"), m4("x2x4")) > 0);
  EXPECT_TRUE(cmp_lex(m4("x2x3"), m4("x2x3")) == 0);
  EXPECT_THROW(cmp_lex(m4("x1"), parse_monomial("x1", RingContext(3))), InputError);
}

TEST(Orders, RevlexExamples) {
  EXPECT_TRUE(cmp_revlex(m4("x2x4"), m4("x1x4")) < 0);
  EXPECT_TRUE(cmp_revlex(m4("x2^2"), m4("x1x3")) > 0);
  EXPECT_TRUE(cmp_revlex(m4("x1x3"), m4("x1x3")) == 0);
  EXPECT_THROW(cmp_revlex(m4("x1"), m4("x1x2")), InputError);
}

TEST(Orders, PrecExamples) {
  EXPECT_TRUE(cmp_prec(m4("x3x4"), m4("x2x4"), 2) < 0);
  EXPECT_TRUE(cmp_prec(m4("x2x3"), m4("x2x4"), 2) > 0);
  EXPECT_TRUE(cmp_prec(m4("x2x3"), m4("x2x3"), 2) == 0);
  EXPECT_THROW(cmp_prec(m4("x2x3"), m4("x2x4"), 1), InputError);
  EXPECT_THROW(cmp_prec(m4("x2x3"), m4("x2x4"), 4), InputError);
}

TEST(Orders, MatchDifferenceVectorDefinitions) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int d = static_cast<int>(rng() % 5);
    const Monomial a = testing::random_monomial(rng, n, d);
    const Monomial b = testing::random_monomial(rng, n, d);
    const auto lex = cmp_lex(a, b);
    const auto rev = cmp_revlex(a, b);
    EXPECT_EQ(lex < 0 ? -1 : (lex > 0 ? 1 : 0), testing::lex_sign_by_difference(a, b));
    EXPECT_EQ(rev < 0 ? -1 : (rev > 0 ? 1 : 0), testing::revlex_sign_by_difference(a, b));
  }
}

// Antisymmetry and transitivity on random equal-degree triples, for all three orders.
TEST(Orders, TotalOrderProperties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int d = 1 + static_cast<int>(rng() % 4);
    const int l = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
    const Monomial a = testing::random_monomial(rng, n, d);
    const Monomial b = testing::random_monomial(rng, n, d);
    const Monomial c = testing::random_monomial(rng, n, d);
    for (auto cmp : {+[](const Monomial& x, const Monomial& y, int) { return cmp_lex(x, y); },
                     +[](const Monomial& x, const Monomial& y, int) { return cmp_revlex(x, y); },
                     +[](const Monomial& x, const Monomial& y, int ll) { return cmp_prec(x, y, ll); }}) {
      EXPECT_EQ(cmp(a, b, l) < 0, cmp(b, a, l) > 0);
      EXPECT_EQ(cmp(a, b, l) == 0, a == b);
      if (cmp(a, b, l) < 0 && cmp(b, c, l) < 0) {
        EXPECT_TRUE(cmp(a, c, l) < 0);
      }
    }
  }
}

TEST(BarTilde, Examples) {
  const auto s1 = bar_tilde_split(m4("x1x3"), 2);
  EXPECT_EQ(s1.bar, m4("x1"));
  EXPECT_EQ(s1.tilde, m4("x3"));
  const auto s2 = bar_tilde_split(m4("x2x4^2"), 2);
  EXPECT_EQ(s2.bar, m4("x2"));
  EXPECT_EQ(s2.tilde, m4("x4^2"));
  const auto s3 = bar_tilde_split(Monomial::one(R4), 2);
  EXPECT_TRUE(s3.bar.is_one());
  EXPECT_TRUE(s3.tilde.is_one());
  EXPECT_THROW(bar_tilde_split(m4("x1"), 0), InputError);
}

TEST(BarTilde, ReconstructsAndSeparatesSupports) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int l = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
    const Monomial m = testing::random_monomial(rng, n, static_cast<int>(rng() % 6));
    const auto split = bar_tilde_split(m, l);
    EXPECT_EQ(multiply(split.bar, split.tilde), m);
    if (!split.bar.is_one() && !split.tilde.is_one()) {
      EXPECT_LE(max_index(split.bar), l);
      EXPECT_GT(min_index(split.tilde), l);
    }
  }
}

TEST(Arithmetic, Examples) {
  EXPECT_TRUE(gcd(m4("x2x4"), m4("x1x3")).is_one());
  EXPECT_EQ(*try_divide(m4("x2x4"), gcd(m4("x2x4"), m4("x1x3"))), m4("x2x4"));
  EXPECT_EQ(*try_divide(m4("x1x2x4"), m4("x1x4")), m4("x2"));
  EXPECT_FALSE(try_divide(m4("x1x4"), m4("x2")).has_value());
  EXPECT_EQ(lcm(m4("x1^2x3"), m4("x1x3^3")), m4("x1^2x3^3"));
  EXPECT_EQ(min_tilde_index(m4("x1x3"), 2), 3);
  EXPECT_EQ(min_index(m4("x1x3")), 1);
  EXPECT_THROW(min_index(Monomial::one(R4)), InputError);
  EXPECT_THROW(min_tilde_index(m4("x1x2"), 2), InputError);
  EXPECT_EQ(power(m4("x2x4"), 3), m4("x2^3x4^3"));
}

TEST(Arithmetic, MultiplyDivideRoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Monomial a = testing::random_monomial(rng, n, static_cast<int>(rng() % 5));
    const Monomial b = testing::random_monomial(rng, n, static_cast<int>(rng() % 5));
    EXPECT_EQ(*try_divide(multiply(a, b), b), a);
    EXPECT_TRUE(gcd(a, b).divides(a));
    EXPECT_TRUE(a.divides(lcm(a, b)));
  }
}

}  // namespace
}  // namespace lexres
