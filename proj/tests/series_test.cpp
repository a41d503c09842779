#include <gtest/gtest.h>

#include "fourcol/census.hpp"
#include "fourcol/truncated_series.hpp"
#include "series_oracles.hpp"

using namespace fourcol;

namespace {

TruncatedSeries poly(std::initializer_list<long> c, int order) {
  std::vector<BigRational> v;
  for (long x : c) v.emplace_back(x);
  return make_series(v, order);
}

}  // namespace

TEST(MakeSeries, Construction) {
  const auto x = make_series({0, 1}, 5);
  EXPECT_EQ(x.order(), 5);
  EXPECT_EQ(x[1], 1);
  EXPECT_EQ(x.valuation(), 1);

  const auto zero = make_series({}, 3);
  EXPECT_EQ(zero.order(), 3);
  EXPECT_TRUE(zero.is_zero());

  const auto sq = poly({1, 2, 1}, 2);
  EXPECT_EQ(sq[0], 1);
  EXPECT_EQ(sq[1], 2);
  EXPECT_EQ(sq[2], 1);
}

TEST(MakeSeries, RejectsBadArguments) {
  EXPECT_THROW(make_series({}, -1), std::invalid_argument);
  EXPECT_THROW(make_series({1, 2, 3}, 1), std::invalid_argument);
}

TEST(SeriesRing, AddAndMulExamples) {
  const auto x = identity_series(6);
  EXPECT_TRUE((x + (-x)).is_zero());
  EXPECT_EQ(poly({1, 1}, 4) + poly({1, -1}, 4), poly({2}, 4));
  EXPECT_EQ(poly({1, 1}, 4) * poly({1, 1}, 4), poly({1, 2, 1}, 4));
  EXPECT_EQ(x * x, monomial(2, 6));
}

TEST(SeriesRing, MixedOrdersTruncateToMinimum) {
  const auto a = poly({1, 1, 1}, 7);
  const auto b = poly({1, 1}, 3);
  EXPECT_EQ((a + b).order(), 3);
  EXPECT_EQ((a * b).order(), 3);
  EXPECT_EQ(compose(a, identity_series(2)).order(), 2);
}

TEST(SeriesRing, SeparatingSeriesIsDifference) {
  const auto g = g_series(12);
  const auto h = h_candidate(12);
  const auto d = g + (-h);
  for (int k = 0; k <= 12; ++k) EXPECT_EQ(d[k], g[k] - h[k]);
}

TEST(SeriesRing, GSquaredMatchesNaiveConvolution) {
  const auto g = g_series(80);
  const auto expected = oracle::naive_mul(oracle::coeffs(g), oracle::coeffs(g), 80);
  EXPECT_EQ(oracle::coeffs(mul(g, g)), expected);
}

TEST(SeriesRing, RingAxiomsOnRandomSeries) {
  oracle::SeriesGenerator gen(20261015);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = gen.series(gen.order(0, 16));
    const auto b = gen.series(gen.order(0, 16));
    const auto c = gen.series(gen.order(0, 16));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(SeriesRing, MulAgreesWithNaiveConvolutionOnRandomInputs) {
  oracle::SeriesGenerator gen(77);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = gen.order(0, 64);
    const auto a = gen.series(n);
    const auto b = gen.series(gen.order(n, 64));
    EXPECT_EQ(oracle::coeffs(mul(a, b)), oracle::naive_mul(oracle::coeffs(a), oracle::coeffs(b), n));
  }
}

TEST(Compose, Examples) {
  const auto a = poly({2, -1, 5, 7}, 6);
  EXPECT_EQ(compose(a, identity_series(6)), a);
  EXPECT_EQ(compose(monomial(2, 4), poly({0, 1, 1}, 4)), poly({0, 0, 1, 2, 1}, 4));
}

TEST(Compose, RejectsConstantTerm) {
  EXPECT_THROW(compose(identity_series(3), poly({1, 1}, 3)), std::invalid_argument);
}

TEST(Compose, IsAssociative) {
  oracle::SeriesGenerator gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = gen.series(gen.order(1, 12), true);
    const auto b = gen.series(gen.order(1, 12), true);
    const auto c = gen.series(gen.order(1, 12), true);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(Compose, AgreesWithNaivePowerSum) {
  oracle::SeriesGenerator gen(9);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = gen.order(1, 14);
    const auto a = gen.series(n);
    const auto b = gen.series(n, true);
    EXPECT_EQ(oracle::coeffs(compose(a, b)), oracle::naive_compose(oracle::coeffs(a), oracle::coeffs(b), n));
  }
}

TEST(Revert, Examples) {
  EXPECT_EQ(revert(identity_series(8)), identity_series(8));

  // y + y^2 = x: signed Catalan numbers, checked against a naive re-solve.
  const auto a = poly({0, 1, 1}, 10);
  const auto b = revert(a);
  EXPECT_EQ(oracle::coeffs(b), oracle::naive_revert(oracle::coeffs(a), 10));
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(b[k], (k % 2 ? 1 : -1) * catalan[k - 1]) << k;

  const auto g = g_series(40);
  EXPECT_EQ(compose(revert(g), g), identity_series(40));
}

TEST(Revert, RejectsInvalidInput) {
  EXPECT_THROW(revert(poly({1, 1}, 4)), std::invalid_argument);
  EXPECT_THROW(revert(poly({0, 0, 1}, 4)), std::invalid_argument);
}

TEST(Revert, IsTwoSidedInverseOnRandomSeries) {
  oracle::SeriesGenerator gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = gen.series(gen.order(1, 12), true);
    if (sgn(a[1]) == 0) a[1] = 3;
    const auto b = revert(a);
    const auto x = identity_series(a.order());
    EXPECT_EQ(compose(a, b), x);
    EXPECT_EQ(compose(b, a), x);
  }
}

TEST(EvalEnclosure, Examples) {
  const auto zero = TruncatedSeries(10);
  const auto z = eval_enclosure(zero, make_rational(1, 3), make_rational(1, 2));
  EXPECT_EQ(z.lower, 0);
  EXPECT_EQ(z.upper, 0);

  std::vector<BigRational> ones(31, BigRational(1));
  const auto geo = make_series(ones, 30);
  const auto e = eval_enclosure(geo, make_rational(1, 2), make_rational(1, 2));
  EXPECT_TRUE(e.contains(BigRational(2)));
  EXPECT_LT(e.width(), make_rational(1, 1 << 29));
}

TEST(EvalEnclosure, RejectsRatioAtLeastOne) {
  EXPECT_THROW(eval_enclosure(identity_series(3), BigRational(1), BigRational(1)), std::invalid_argument);
  EXPECT_THROW(eval_enclosure(identity_series(3), BigRational(-1), BigRational(0)), std::invalid_argument);
}
