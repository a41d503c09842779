#pragma once

// Coefficient asymptotics around the dominant singularity r = 27/256 of g(x):
// Stirling forms of g_n and h_n, the transfer ("fundamental") formula, the
// constants A = g(r) and B, ratio-test radius estimates, the 3F2 term
// structure, and least-squares fits of the singular expansion.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourcol/big_rational.hpp"
#include "fourcol/census.hpp"
#include "fourcol/claim.hpp"
#include "fourcol/errors.hpp"
#include "fourcol/gamma.hpp"
#include "fourcol/high_precision.hpp"
#include "fourcol/truncated_series.hpp"

namespace fourcol {

/// Radius of convergence of g(x).
inline BigRational singularity() { return make_rational(27, 256); }

/// Radius implied by the growth base 27/4 of the h_n formula.
inline BigRational h_formula_radius() { return make_rational(4, 27); }

// ---------------------------------------------------------------------------
// Least squares

struct LeastSquaresFit {
  std::vector<Real> coefficients;
  Real rms_residual;
  Real condition;  // of the column-normalized normal matrix
};

/// Fits y ~ sum_j c_j basis[j] by normal equations at the current precision.
/// `design[i][j]` is basis function j at sample i.
inline LeastSquaresFit least_squares(const std::vector<std::vector<Real>>& design, const std::vector<Real>& y) {
  const std::size_t m = design.size();
  if (m == 0) throw EstimationError("least squares: no samples");
  const std::size_t p = design.front().size();
  if (m < p) throw EstimationError("least squares: fewer samples than parameters");

  std::vector<Real> norm(p, Real(0));
  for (const auto& row : design)
    for (std::size_t j = 0; j < p; ++j) norm[j] += row[j] * row[j];
  for (auto& v : norm) {
    v = sqrt(v);
    if (v == 0) throw EstimationError("least squares: zero column");
  }

  // Augmented [N | I | b] for Gauss-Jordan on the scaled normal equations.
  std::vector<std::vector<Real>> a(p, std::vector<Real>(2 * p + 1, Real(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const Real xj = design[i][j] / norm[j];
      for (std::size_t k = 0; k < p; ++k) a[j][k] += xj * design[i][k] / norm[k];
      a[j][2 * p] += xj * y[i];
    }
  Real norm_n = 0;
  for (std::size_t j = 0; j < p; ++j) {
    Real row = 0;
    for (std::size_t k = 0; k < p; ++k) row += abs(a[j][k]);
    norm_n = max(norm_n, row);
    a[j][p + j] = 1;
  }
  for (std::size_t col = 0; col < p; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < p; ++r)
      if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
    if (a[piv][col] == 0) throw EstimationError("least squares: singular normal matrix");
    std::swap(a[piv], a[col]);
    const Real d = a[col][col];
    for (auto& v : a[col]) v /= d;
    for (std::size_t r = 0; r < p; ++r) {
      if (r == col) continue;
      const Real f = a[r][col];
      if (f == 0) continue;
      for (std::size_t k = 0; k < 2 * p + 1; ++k) a[r][k] -= f * a[col][k];
    }
  }
  Real norm_inv = 0;
  for (std::size_t j = 0; j < p; ++j) {
    Real row = 0;
    for (std::size_t k = 0; k < p; ++k) row += abs(a[j][p + k]);
    norm_inv = max(norm_inv, row);
  }

  LeastSquaresFit fit;
  fit.condition = norm_n * norm_inv;
  if (fit.condition > Real(1e12))
    throw EstimationError("least squares: ill-conditioned fit (condition " + format_real(fit.condition, 4) + ", " +
                          std::to_string(m) + " samples, " + std::to_string(p) + " parameters)");
  for (std::size_t j = 0; j < p; ++j) fit.coefficients.push_back(a[j][2 * p] / norm[j]);
  Real ss = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Real r = y[i];
    for (std::size_t j = 0; j < p; ++j) r -= fit.coefficients[j] * design[i][j];
    ss += r * r;
  }
  fit.rms_residual = sqrt(ss / m);
  return fit;
}

/// Limit of a sequence y_n = L + c/n + O(1/n^2), by a linear fit in 1/n.
inline LeastSquaresFit extrapolate_in_inverse_n(const std::vector<int>& n, const std::vector<Real>& y) {
  std::vector<std::vector<Real>> design;
  for (int k : n) design.push_back({Real(1), Real(1) / k});
  return least_squares(design, y);
}

// ---------------------------------------------------------------------------
// Transfer formula, Stirling forms, B

struct FundamentalCoefficient {
  BigRational exact;              ///< [x^n] (1-x)^-alpha
  HighPrecisionReal asymptotic;   ///< n^(alpha-1) / Gamma(alpha)
};

namespace detail {

inline void require_not_pole(const BigRational& alpha) {
  if (is_integer(alpha) && sgn(alpha) <= 0) throw std::domain_error("alpha is a non-positive integer");
}

}  // namespace detail

inline FundamentalCoefficient fundamental_coeff(const BigRational& alpha, int n, int digits = 50) {
  if (n < 1) throw std::invalid_argument("fundamental_coeff: n must be at least 1");
  detail::require_not_pole(alpha);
  BigRational exact = 1;
  for (int j = 0; j < n; ++j) exact *= (alpha + j) / (j + 1);
  const HighPrecisionReal gamma = gamma_real(alpha, digits);
  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  Real asym = pow(Real(n), to_real(alpha) - 1) / gamma.value;
  return {exact, {asym, default_error_bound(digits), digits}};
}

/// max over 1 <= n <= n_max of n * |asymptotic / exact - 1| for the transfer formula.
inline Real fundamental_scaled_error(const BigRational& alpha, int n_max, int digits = 30) {
  detail::require_not_pole(alpha);
  const Real inv_gamma = 1 / gamma_real(alpha, digits).value;
  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  const Real exponent = to_real(alpha) - 1;
  BigRational exact = 1;
  Real worst = 0;
  for (int n = 1; n <= n_max; ++n) {
    exact *= (alpha + (n - 1)) / n;
    const Real ratio = pow(Real(n), exponent) * inv_gamma / to_real(exact);
    worst = max(worst, n * abs(ratio - 1));
  }
  return worst;
}

/// (1/16) sqrt(3/(2 pi)) n^(-5/2) (256/27)^(n+1).
inline HighPrecisionReal g_asym(int n, int digits = 50) {
  if (n < 1) throw std::invalid_argument("g_asym: n must be at least 1");
  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  const Real v = sqrt(Real(3) / (2 * pi_real())) / 16 * pow(Real(n), Real(-2.5)) * pow(Real(256) / 27, n + 1);
  return {v, default_error_bound(digits), digits};
}

/// g_asym(n) / g_n - 1.
inline Real g_asym_relative_error(int n, int digits = 30) {
  const HighPrecisionReal a = g_asym(n, digits);
  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  return a.value / to_real(g_coeff(n)) - 1;
}

/// (1/128) sqrt(3/pi) n^(-5/2) (27/4)^(n+1).
inline HighPrecisionReal h_asym(int n, int digits = 50) {
  if (n < 1) throw std::invalid_argument("h_asym: n must be at least 1");
  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  const Real v = sqrt(Real(3) / pi_real()) / 128 * pow(Real(n), Real(-2.5)) * pow(Real(27) / 4, n + 1);
  return {v, default_error_bound(digits), digits};
}

/// B = (16/27) sqrt(3/(2 pi)), the coefficient in g_n ~ B (256/27)^n n^(-5/2).
inline HighPrecisionReal const_B(int digits = 50) {
  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  return {Real(16) / 27 * sqrt(Real(3) / (2 * pi_real())), default_error_bound(digits), digits};
}

// ---------------------------------------------------------------------------
// A = g(27/256)
//
// t_n = g_n r^n has the hypergeometric term ratio
//   rho(n) = t_{n+1}/t_n = (n+5/4)(n+3/4)(n+1/2) / ((n+2)(n+5/3)(n+4/3)) = P(n)/Q(n),
// which tends to 1, so no geometric tail bound applies. Instead we find
// R(n) = S(n)/n^K with R(n) - R(n+1) rho(n) = 1 + eps(n), |eps(n)| <= E for
// n >= N. Telescoping then gives
//   sum_{n>=N} t_n in [R(N) t_N / (1+E), R(N) t_N / (1-E)].

namespace detail {

using Poly = std::vector<BigRational>;  // coefficient i multiplies n^i

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Poly poly_pow(const Poly& a, int e) {
  Poly r{BigRational(1)};
  for (int i = 0; i < e; ++i) r = poly_mul(r, a);
  return r;
}

inline Poly poly_sub(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

inline BigRational poly_eval(const Poly& p, const BigRational& x) {
  BigRational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

inline Poly monic_linear(const BigRational& c) { return {c, BigRational(1)}; }

inline Poly term_ratio_numerator() {
  return poly_mul(poly_mul(monic_linear(make_rational(5, 4)), monic_linear(make_rational(3, 4))),
                  monic_linear(make_rational(1, 2)));
}

inline Poly term_ratio_denominator() {
  return poly_mul(poly_mul(monic_linear(BigRational(2)), monic_linear(make_rational(5, 3))),
                  monic_linear(make_rational(4, 3)));
}

/// Solves a square linear system over the rationals.
inline std::vector<BigRational> solve_exact(std::vector<std::vector<BigRational>> a, std::vector<BigRational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw EstimationError("tail certificate: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const BigRational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

struct TailCertificate {
  int order = 0;  // K
  Poly s;         // R(n) = S(n) / n^K
  Poly residual;  // eps(n) n^K (n+1)^K Q(n), degree <= K+1

  BigRational r_at(const BigRational& n) const { return poly_eval(s, n) / pow(n, static_cast<unsigned long>(order)); }

  /// E with |eps(n)| <= E for all n >= N.
  BigRational eps_bound(long N) const {
    const BigRational big_n(N);
    BigRational c = 0;
    for (std::size_t i = 0; i < residual.size(); ++i) {
      const long shift = static_cast<long>(i) - (order + 1);
      c += abs(residual[i]) / pow(big_n, static_cast<unsigned long>(-shift));
    }
    return c / pow(big_n, static_cast<unsigned long>(order + 2));
  }
};

inline TailCertificate make_tail_certificate(int order) {
  const Poly p = term_ratio_numerator();
  const Poly q = term_ratio_denominator();
  const Poly n_pow = poly_pow(Poly{BigRational(0), BigRational(1)}, order);
  const Poly n1_pow = poly_pow(Poly{BigRational(1), BigRational(1)}, order);
  const Poly forcing = poly_mul(poly_mul(n_pow, n1_pow), q);

  // Column j: n^j (n+1)^K Q(n) - (n+1)^j n^K P(n).
  const int unknowns = order + 2;
  std::vector<Poly> columns;
  for (int j = 0; j < unknowns; ++j) {
    const Poly nj = poly_pow(Poly{BigRational(0), BigRational(1)}, j);
    const Poly n1j = poly_pow(Poly{BigRational(1), BigRational(1)}, j);
    columns.push_back(poly_sub(poly_mul(poly_mul(nj, n1_pow), q), poly_mul(poly_mul(n1j, n_pow), p)));
  }
  auto coeff = [](const Poly& poly, int m) {
    return m < static_cast<int>(poly.size()) ? poly[m] : BigRational(0);
  };
  std::vector<std::vector<BigRational>> a;
  std::vector<BigRational> b;
  for (int m = order + 2; m <= 2 * order + 3; ++m) {
    std::vector<BigRational> row;
    for (int j = 0; j < unknowns; ++j) row.push_back(coeff(columns[j], m));
    a.push_back(std::move(row));
    b.push_back(coeff(forcing, m));
  }
  TailCertificate cert;
  cert.order = order;
  cert.s = solve_exact(std::move(a), std::move(b));
  // residual = sum_j s_j column_j - forcing
  Poly residual = poly_sub(Poly{}, forcing);
  for (int j = 0; j < unknowns; ++j) {
    Poly scaled = columns[j];
    for (auto& c : scaled) c *= -cert.s[j];
    residual = poly_sub(residual, scaled);
  }
  for (std::size_t m = static_cast<std::size_t>(order) + 2; m < residual.size(); ++m)
    if (sgn(residual[m]) != 0) throw ConsistencyFault("tail certificate: high-order residual did not cancel");
  residual.resize(static_cast<std::size_t>(order) + 2);
  cert.residual = std::move(residual);
  return cert;
}

}  // namespace detail

struct AEnclosure {
  Interval<BigRational> value;            ///< encloses sum_{n>=1} g_n r^n
  Interval<BigRational> literal_reading;  ///< r + 2 sum_{n>=2} g_n r^(n+1), from the same enclosure
  int terms = 0;                          ///< partial-sum length N used last
};

/// Rigorous enclosure of A = g(27/256) of width at most 10^-digits.
///
/// Enclosures for successive N are intersected, so asking for more digits
/// never yields an interval outside a previous one.
inline AEnclosure eval_A(int digits) {
  if (digits < 6) throw std::invalid_argument("eval_A: digits must be at least 6");
  static const detail::TailCertificate cert = detail::make_tail_certificate(12);
  const BigRational r = singularity();
  const BigRational target = make_rational(BigInt(1), pow(BigInt(10), static_cast<unsigned long>(digits)));
  const BigInt grid = pow(BigInt(10), static_cast<unsigned long>(digits + 6));

  auto floor_to_grid = [&](const BigRational& x) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), BigInt(x.get_num() * grid).get_mpz_t(), x.get_den().get_mpz_t());
    return make_rational(f, grid);
  };
  auto ceil_to_grid = [&](const BigRational& x) {
    BigInt c;
    mpz_cdiv_q(c.get_mpz_t(), BigInt(x.get_num() * grid).get_mpz_t(), x.get_den().get_mpz_t());
    return make_rational(c, grid);
  };

  BigRational partial = 0;  // sum_{n < N} t_n
  BigRational t = r;        // t_1
  int n = 1;
  Interval<BigRational> best{BigRational(0), BigRational(1)};
  bool have = false;
  for (long big_n = 32; big_n <= (1L << 16); big_n *= 2) {
    for (; n < big_n; ++n) {
      partial += t;
      t *= g_term_ratio(n) * r;
    }
    const BigRational e = cert.eps_bound(big_n);
    const BigRational rt = cert.r_at(BigRational(big_n)) * t;
    if (e >= make_rational(1, 2) || sgn(rt) <= 0) continue;
    Interval<BigRational> now{floor_to_grid(partial + rt / (1 + e)), ceil_to_grid(partial + rt / (1 - e))};
    if (have) {
      best.lower = std::max(best.lower, now.lower);
      best.upper = std::min(best.upper, now.upper);
    } else {
      best = now;
      have = true;
    }
    if (best.width() <= target) {
      AEnclosure out;
      out.value = best;
      out.literal_reading = {r + 2 * r * (best.lower - r), r + 2 * r * (best.upper - r)};
      out.terms = static_cast<int>(big_n);
      return out;
    }
  }
  throw EstimationError("eval_A: could not reach " + std::to_string(digits) + " digits within 65536 terms");
}

inline Real midpoint(const Interval<BigRational>& i) { return to_real((i.lower + i.upper) / 2); }

// ---------------------------------------------------------------------------
// Ratio [x^n] g^2 / [x^n] g

struct RatioRow {
  int n = 0;
  BigRational ratio;
  double approx = 0;
};

struct RatioTable {
  std::vector<RatioRow> rows;
  Real extrapolated_limit;  ///< linear fit in 1/n over the trailing quarter
  Real fit_residual;
  AEnclosure a;
  Real two_a;               ///< standard singularity-analysis prediction 2A
  Real paper_constant;      ///< (27/2) sqrt(3/2) A B
  Real implied_constant;    ///< 3A / (2 sqrt(pi)): the g^2 asymptotic divided by B
  int peak_n = 0;           ///< index of the largest ratio
  int decreasing_from = 0;  ///< ratios strictly decrease for n >= this index
};

inline RatioTable ratio_table(int order, int a_digits = 12, int digits = 30) {
  if (order < 10) throw std::invalid_argument("ratio_table: order must be at least 10");
  const TruncatedSeries g = g_series(order);
  const TruncatedSeries g2 = mul(g, g);
  RatioTable t;
  for (int n = 1; n <= order; ++n) {
    RatioRow row;
    row.n = n;
    row.ratio = g2[n] / g[n];
    row.approx = row.ratio.get_d();
    t.rows.push_back(std::move(row));
  }
  t.peak_n = 1;
  for (const auto& row : t.rows)
    if (row.ratio > t.rows[t.peak_n - 1].ratio) t.peak_n = row.n;
  t.decreasing_from = order;
  while (t.decreasing_from > 1 && t.rows[t.decreasing_from - 2].ratio > t.rows[t.decreasing_from - 1].ratio)
    --t.decreasing_from;

  t.a = eval_A(a_digits);
  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  std::vector<int> ns;
  std::vector<Real> ys;
  for (int n = order - order / 4 + 1; n <= order; ++n) {
    ns.push_back(n);
    ys.push_back(to_real(t.rows[n - 1].ratio));
  }
  const LeastSquaresFit fit = extrapolate_in_inverse_n(ns, ys);
  t.extrapolated_limit = fit.coefficients[0];
  t.fit_residual = fit.rms_residual;
  const Real a = midpoint(t.a.value);
  const Real b = const_B(digits).value;
  t.two_a = 2 * a;
  t.paper_constant = Real(27) / 2 * sqrt(Real(3) / 2) * a * b;
  t.implied_constant = 3 * a / (2 * sqrt(pi_real()));
  return t;
}

// ---------------------------------------------------------------------------
// Radius of convergence

/// Ratio-test estimate of the radius of convergence: |c_n / c_{n+1}| over the
/// trailing `window` consecutive pairs, extrapolated linearly in 1/n.
inline HighPrecisionReal radius_estimate(std::span<const BigRational> coeffs, int window, int digits = 30) {
  if (window < 4) throw std::invalid_argument("radius_estimate: window must be at least 4");
  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  const int last = static_cast<int>(coeffs.size()) - 1;
  std::vector<int> ns;
  std::vector<Real> ys;
  for (int n = std::max(0, last - window); n < last; ++n) {
    if (sgn(coeffs[n]) == 0 || sgn(coeffs[n + 1]) == 0) continue;
    ns.push_back(std::max(n, 1));
    ys.push_back(to_real(BigRational(abs(coeffs[n] / coeffs[n + 1]))));
  }
  if (ns.size() < 2) throw EstimationError("radius_estimate: window has fewer than two nonzero coefficient pairs");
  const LeastSquaresFit fit = extrapolate_in_inverse_n(ns, ys);
  return {fit.coefficients[0], max(fit.rms_residual, default_error_bound(digits)), digits};
}

// ---------------------------------------------------------------------------
// Hypergeometric structure

/// Checks exactly, for n <= order, that
///  (a) f_{1,n} = 2 (4n-3)! / (3n-1)! satisfies
///      f_{1,n+1} / f_{1,n} = (256/27) (n+1/4)(n-1/4)(n-1/2) / ((n+2/3)(n+1/3)),
///  (b) [x^n] f_1(27x/256) equals (3/4) times the n-th term of
///      3F2(1/4, -1/4, -1/2; 2/3, 1/3; x), with constant term 0,
///  (c) f_1(x) = x (1 + g(x)), i.e. [x^(n+1)] f_1 = g_n.
inline ClaimRecord f32_check(int order) {
  if (order < 3) throw std::invalid_argument("f32_check: order must be at least 3");
  auto f1_coeff = [](long n) {
    return make_rational(2 * factorial(static_cast<unsigned long>(4 * n - 3)),
                         factorial(static_cast<unsigned long>(n)) * factorial(static_cast<unsigned long>(3 * n - 1)));
  };
  ClaimRecord rec;
  rec.claim_id = "F32-hypergeometric";
  rec.paper_ref = "f(x) = f1(27x/256) = (3/4)(3F2(1/4,-1/4,-1/2; 2/3,1/3; x) - 1)";
  int bad_ratio = 0, bad_term = 0, bad_shift = 0;
  const BigRational r = singularity();
  BigRational hyper_term = 1;  // n = 0 term of the 3F2
  BigRational prev = f1_coeff(1);
  for (long n = 1; n <= order; ++n) {
    const BigRational c = n == 1 ? prev : f1_coeff(n);
    if (n > 1) {
      const long k = n - 1;
      // f_{1,n} = n! c_n, so f_{1,n}/f_{1,k} = n c_n / c_k.
      const BigRational lhs = BigRational(n) * c / prev;
      const BigRational rhs = make_rational(256, 27) * (k + make_rational(1, 4)) * (k - make_rational(1, 4)) *
                              (k - make_rational(1, 2)) / ((k + make_rational(2, 3)) * (k + make_rational(1, 3)));
      if (lhs != rhs) ++bad_ratio;
    }
    const long k = n - 1;
    hyper_term *= (k + make_rational(1, 4)) * (k - make_rational(1, 4)) * (k - make_rational(1, 2)) /
                  ((k + make_rational(2, 3)) * (k + make_rational(1, 3)) * (k + 1));
    const BigRational lhs_term = c * pow(r, static_cast<unsigned long>(n));
    const BigRational rhs_term = make_rational(3, 4) * hyper_term;
    if (lhs_term != rhs_term) {
      ++bad_term;
      rec.residual.emplace_back(static_cast<int>(n), lhs_term - rhs_term);
    }
    if (n >= 2 && c != g_coeff(static_cast<int>(n - 1))) ++bad_shift;
    prev = c;
  }
  rec.status = verdict(bad_ratio == 0 && bad_term == 0 && bad_shift == 0);
  rec.detail = "n<=" + std::to_string(order) + ": term-ratio mismatches " + std::to_string(bad_ratio) +
               ", 3F2 term mismatches " + std::to_string(bad_term) + ", f1=x(1+g) mismatches " +
               std::to_string(bad_shift);
  return rec;
}

// ---------------------------------------------------------------------------
// Singular expansion fit

/// Near r, g(r - d) = A + A1 d + (B Gamma(-3/2)) (d/r)^(3/2) + ..., with the
/// 3/2-power coefficient represented through B from g_n ~ B r^-n n^-5/2.
struct SingularExpansion {
  HighPrecisionReal A;
  HighPrecisionReal A1;
  HighPrecisionReal B;
  BigRational r = singularity();
  Real two_term_residual;  ///< rms of g_n r^n n^(5/2) - (c1 + c2/n)
  Real one_term_residual;  ///< rms with c2 forced to 0
  Real derivative_fit_residual;
};

/// Least-squares fits over the trailing half of n <= order:
///  * g_n r^n against c1 n^-5/2 + c2 n^-7/2 (fitted in the scaled form
///    g_n r^n n^(5/2) = c1 + c2/n), giving B = c1;
///  * partial sums of g'(r) = sum n g_n r^(n-1) against L + c N^-1/2 + d N^-3/2,
///    giving A1 = -L.
/// A comes from eval_A.
inline SingularExpansion singular_fit(int order, int digits = 30) {
  if (order < 100) throw std::invalid_argument("singular_fit: order must be at least 100");
  const TruncatedSeries g = g_series(order);
  const BigRational r = singularity();
  SingularExpansion out;
  const AEnclosure a = eval_A(std::max(12, std::min(digits, 30)));

  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  std::vector<int> ns;
  std::vector<Real> scaled;
  std::vector<std::vector<Real>> deriv_design;
  std::vector<Real> deriv_sums;
  BigRational rn = 1;        // r^n
  BigRational deriv = 0;     // sum_{k<=n} k g_k r^(k-1)
  for (int n = 1; n <= order; ++n) {
    deriv += n * g[n] * rn;  // rn = r^(n-1) here
    rn *= r;
    if (n < order / 2) continue;
    const Real t = to_real(BigRational(g[n] * rn));
    ns.push_back(n);
    scaled.push_back(t * pow(Real(n), Real(2.5)));
    const Real big_n(n);
    deriv_design.push_back({Real(1), 1 / sqrt(big_n), 1 / (big_n * sqrt(big_n))});
    deriv_sums.push_back(to_real(deriv));
  }
  const LeastSquaresFit two = extrapolate_in_inverse_n(ns, scaled);
  std::vector<std::vector<Real>> constant_design(ns.size(), std::vector<Real>{Real(1)});
  const LeastSquaresFit one = least_squares(constant_design, scaled);
  const LeastSquaresFit der = least_squares(deriv_design, deriv_sums);

  out.B = {two.coefficients[0], two.rms_residual, digits};
  out.A = {midpoint(a.value), to_real(a.value.width()), digits};
  out.A1 = {-der.coefficients[0], der.rms_residual, digits};
  out.two_term_residual = two.rms_residual;
  out.one_term_residual = one.rms_residual;
  out.derivative_fit_residual = der.rms_residual;
  return out;
}

}  // namespace fourcol
