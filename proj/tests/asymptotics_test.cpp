#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fourcol/asymptotics.hpp"
#include "series_oracles.hpp"

using namespace fourcol;

namespace {

double rel(const Real& a, const Real& b) { return abs(a / b - 1).convert_to<double>(); }

}  // namespace

TEST(Gamma, ExactShortcuts) {
  PrecisionScope scope(60);
  const Real sqrt_pi = sqrt(pi_real());
  EXPECT_LT(rel(gamma_real(BigRational(1)).value, Real(1)), 1e-45);
  EXPECT_LT(rel(gamma_real(make_rational(1, 2)).value, sqrt_pi), 1e-45);
  EXPECT_LT(rel(gamma_real(make_rational(5, 2)).value, Real(3) / 4 * sqrt_pi), 1e-45);
  EXPECT_EQ(*gamma_half_integer_factor(make_rational(-1, 2)), -2);
  EXPECT_EQ(*gamma_half_integer_factor(make_rational(-3, 2)), make_rational(4, 3));
}

TEST(Gamma, GeneralPathMatchesKnownValues) {
  PrecisionScope scope(60);
  // Spouge path at a half-integer, compared with the exact shortcut.
  EXPECT_LT(rel(gamma_real(Real(0.5), 30).value, sqrt(pi_real())), 1e-28);
  EXPECT_NEAR(gamma_real(Real("0.3"), 20).to_double(), std::tgamma(0.3), 1e-13);
  EXPECT_NEAR(gamma_real(Real("-1.7"), 20).to_double(), std::tgamma(-1.7), 1e-12);
  EXPECT_NEAR(gamma_real(make_rational(7, 3), 20).to_double(), std::tgamma(7.0 / 3.0), 1e-13);
}

TEST(Gamma, RecurrenceOnRandomPoints) {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(0.001, 5.0);
  for (int i = 0; i < 100; ++i) {
    const Real z(dist(rng));
    const Real lhs = gamma_real(Real(z + 1), 16).value;
    const Real rhs = z * gamma_real(z, 16).value;
    EXPECT_LT(rel(lhs, rhs), 1e-12) << z;
  }
}

TEST(Gamma, PolesAreDomainErrors) {
  EXPECT_THROW(gamma_real(BigRational(0)), std::domain_error);
  EXPECT_THROW(gamma_real(BigRational(-3)), std::domain_error);
  EXPECT_THROW(gamma_real(Real(-2)), std::domain_error);
}

TEST(FundamentalCoeff, Examples) {
  for (int n : {1, 5, 40}) {
    const auto one = fundamental_coeff(BigRational(1), n);
    EXPECT_EQ(one.exact, 1);
    EXPECT_LT(rel(one.asymptotic.value, Real(1)), 1e-40);
    const auto two = fundamental_coeff(BigRational(2), n);
    EXPECT_EQ(two.exact, n + 1);
    EXPECT_LT(rel(two.asymptotic.value, Real(n)), 1e-40);
  }
  const auto half = fundamental_coeff(make_rational(1, 2), 100);
  BigInt central;
  mpz_bin_uiui(central.get_mpz_t(), 200, 100);
  EXPECT_EQ(half.exact, make_rational(central, pow(BigInt(4), 100)));
  PrecisionScope scope(60);
  EXPECT_LT(rel(half.asymptotic.value, 1 / sqrt(pi_real() * 100)), 1e-40);
  EXPECT_LT(rel(half.asymptotic.value, to_real(half.exact)), 0.01);
  EXPECT_THROW(fundamental_coeff(BigRational(0), 3), std::domain_error);
}

TEST(FundamentalCoeff, ErrorWithinTwoOverN) {
  for (auto alpha : {make_rational(1, 2), make_rational(3, 2), make_rational(5, 2)})
    EXPECT_LE(fundamental_scaled_error(alpha, 2000), Real(2)) << alpha;
}

TEST(GAsym, RelativeErrorShrinks) {
  double previous = 1;
  for (int n : {10, 20, 40, 80, 160}) {
    const double e = abs(g_asym_relative_error(n)).convert_to<double>();
    EXPECT_LT(e, previous) << n;
    previous = e;
  }
  EXPECT_LT(abs(g_asym_relative_error(200)).convert_to<double>(), 0.02);
}

TEST(GAsym, RescalesToB) {
  PrecisionScope scope(60);
  for (int n : {1, 7, 300}) {
    const Real v = g_asym(n).value * to_real(pow(singularity(), n)) * pow(Real(n), Real(2.5));
    EXPECT_LT(rel(v, const_B().value), 1e-40);
  }
}

TEST(HAsym, Examples) {
  PrecisionScope scope(60);
  EXPECT_LT(rel(h_asym(1).value, sqrt(Real(3) / pi_real()) / 128 * Real(729) / 16), 1e-40);
  EXPECT_LT(rel(h_asym(41).value / h_asym(40).value, Real(27) / 4 * pow(Real(40) / 41, Real(2.5))), 1e-40);
  EXPECT_EQ(h_formula_radius(), make_rational(4, 27));
}

TEST(ConstB, AgreesWithMachinOracle) {
  PrecisionScope scope(60);
  const Real b = const_B().value;
  EXPECT_GT(b, 0);
  // B^2 = 128 / (243 pi)
  const Real expected = sqrt(to_real(make_rational(128, 243) / oracle::machin_pi()));
  EXPECT_LT(rel(b, expected), 1e-12);
  EXPECT_NEAR(b.convert_to<double>(), 0.40947455, 1e-8);
}

TEST(EvalA, EnclosureProperties) {
  const BigRational r = singularity();
  const auto a6 = eval_A(6);
  EXPECT_GT(a6.value.lower, r);
  EXPECT_LE(a6.value.width(), make_rational(1, 1000000));

  const auto a20 = eval_A(20);
  const auto a40 = eval_A(40);
  EXPECT_LE(a40.value.width(), make_rational(BigInt(1), pow(BigInt(10), 40)));
  EXPECT_TRUE(a6.value.lower <= a20.value.lower && a20.value.upper <= a6.value.upper);
  EXPECT_TRUE(a20.value.lower <= a40.value.lower && a40.value.upper <= a20.value.upper);

  // Direct partial sums of positive terms can only sit below the value.
  BigRational partial = 0, t = r;
  for (int n = 1; n <= 3000; ++n) {
    partial += t;
    t *= g_term_ratio(n) * r;
  }
  EXPECT_LT(partial, a40.value.upper);
  EXPECT_GT(partial + make_rational(1, 10000), a40.value.lower);

  // g is algebraic: x = u(1-u)^3, 1 + g = (1-2u)/(1-u)^3, and r corresponds
  // to u = 1/4, giving g(r) = 32/27 - 1.
  EXPECT_TRUE(a40.value.contains(make_rational(5, 27)));

  const auto& lit = a40.literal_reading;
  EXPECT_EQ(lit.lower, r + 2 * r * (a40.value.lower - r));
  EXPECT_THROW(eval_A(5), std::invalid_argument);
}

TEST(EvalA, TailCertificateShape) {
  const auto cert = detail::make_tail_certificate(8);
  EXPECT_EQ(cert.s.back(), make_rational(2, 3));
  EXPECT_LT(cert.eps_bound(64), make_rational(1, 1000000000));
  EXPECT_LT(cert.eps_bound(128), cert.eps_bound(64));
}

TEST(RatioTable, Rows) {
  const auto t = ratio_table(400);
  ASSERT_EQ(t.rows.size(), 400u);
  EXPECT_EQ(t.rows[0].ratio, 0);
  EXPECT_EQ(t.rows[1].ratio, make_rational(1, 3));
  EXPECT_EQ(t.rows[2].ratio, make_rational(6, 13));
  for (const auto& row : t.rows) EXPECT_DOUBLE_EQ(row.approx, row.ratio.get_d());
  // Measured shape: the sequence peaks early and then decreases toward 2A.
  EXPECT_EQ(t.peak_n, 7);
  EXPECT_EQ(t.decreasing_from, 7);
  EXPECT_LT(abs(t.extrapolated_limit / t.two_a - 1).convert_to<double>(), 0.01);
  EXPECT_GT(t.paper_constant, t.two_a);
  EXPECT_LT(t.implied_constant, t.two_a);
  EXPECT_THROW(ratio_table(9), std::invalid_argument);
}

TEST(RadiusEstimate, GeometricSeries) {
  for (auto c : {BigRational(2), BigRational(3), make_rational(256, 27)}) {
    std::vector<BigRational> coeffs;
    BigRational p = 1;
    for (int n = 0; n <= 60; ++n, p *= c) coeffs.push_back(p);
    const double est = radius_estimate(coeffs, 20).to_double();
    EXPECT_NEAR(est * c.get_d(), 1.0, 1e-3) << c;
  }
}

TEST(RadiusEstimate, GeneratingFunctionOfTriangulations) {
  const auto g = g_series(500);
  const double est = radius_estimate(g.coefficients(), 125).to_double();
  EXPECT_NEAR(est / (27.0 / 256.0), 1.0, 1e-3);
}

TEST(RadiusEstimate, Errors) {
  std::vector<BigRational> zeros(20);
  EXPECT_THROW(radius_estimate(zeros, 8), EstimationError);
  EXPECT_THROW(radius_estimate(zeros, 3), std::invalid_argument);
}

TEST(F32Check, Structure) {
  const auto rec = f32_check(200);
  EXPECT_EQ(rec.status, ClaimStatus::pass) << rec.detail;
  // Term ratio at n = 1 and the first f1 coefficient.
  const BigRational ratio_at_1 = make_rational(5, 4) * make_rational(3, 4) * make_rational(1, 2) /
                                 (make_rational(5, 3) * make_rational(4, 3)) * make_rational(256, 27);
  // f_{1,n} = 2 (4n-3)! / (3n-1)!; the x^1 coefficient f_{1,1}/1! is 1.
  const BigRational f11 = make_rational(2 * 1, 2);
  const BigRational f12 = make_rational(2 * 120, 120);
  EXPECT_EQ(f11, 1);
  EXPECT_EQ(f12 / f11, ratio_at_1);
  EXPECT_EQ(ratio_at_1, 2);
}

TEST(SingularFit, RecoversB) {
  const double b = const_B().to_double();
  const auto fit1000 = singular_fit(1000);
  EXPECT_NEAR(fit1000.B.to_double() / b, 1.0, 0.02);
  EXPECT_LT(fit1000.two_term_residual, fit1000.one_term_residual);
  const auto fit250 = singular_fit(250);
  const auto fit500 = singular_fit(500);
  EXPECT_LT(fit500.two_term_residual, fit250.two_term_residual);
  EXPECT_LT(fit1000.two_term_residual, fit500.two_term_residual);
  // From the same parametrization as A: g'(r) = (1-u)^-6 at u = 1/4.
  EXPECT_NEAR(fit1000.A1.to_double(), -4096.0 / 729.0, 1e-3);
  EXPECT_NEAR(fit1000.A.to_double(), 5.0 / 27.0, 1e-12);
  EXPECT_EQ(fit1000.r, make_rational(27, 256));
  EXPECT_THROW(singular_fit(50), std::invalid_argument);
}
