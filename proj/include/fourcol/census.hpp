#pragma once

// Generating functions for rooted 3-connected triangulations and the series
// derived from them: g(x), the reversion-defined companion h(x), the
// separable part (g - h)^2, and g with a single monomial removed.

#include <stdexcept>
#include <string>

#include "fourcol/big_rational.hpp"
#include "fourcol/errors.hpp"
#include "fourcol/truncated_series.hpp"

namespace fourcol {

/// Two normalizations of g(x). The zero-constant form starts x + 3x^2 + ...,
/// the Tutte form prepends the constant term 1.
enum class SeriesConvention { zero_constant, tutte };

inline bool includes_unit(SeriesConvention conv) { return conv == SeriesConvention::tutte; }

inline std::string to_string(SeriesConvention conv) {
  return conv == SeriesConvention::tutte ? "tutte" : "zero-constant";
}

/// g_n = 2 (4n+1)! / ((n+1)! (3n+2)!), evaluated from factorials.
inline BigRational g_coeff(int n) {
  if (n < 1) throw std::invalid_argument("g_coeff: n must be at least 1");
  const auto un = static_cast<unsigned long>(n);
  const BigInt num = 2 * factorial(4 * un + 1);
  const BigInt den = factorial(un + 1) * factorial(3 * un + 2);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw ConsistencyFault("g_coeff: factorial quotient is not an integer at n = " + std::to_string(n));
  return BigRational(BigInt(num / den));
}

/// g_{n+1} / g_n = (4n+5)(4n+4)(4n+3)(4n+2) / ((n+2)(3n+5)(3n+4)(3n+3)).
inline BigRational g_term_ratio(int n) {
  const long m = n;
  return make_rational(BigInt(4 * m + 5) * (4 * m + 4) * (4 * m + 3) * (4 * m + 2),
                       BigInt(m + 2) * (3 * m + 5) * (3 * m + 4) * (3 * m + 3));
}

/// g(x) through x^order. Coefficients come from the term ratio recurrence,
/// which keeps high orders cheap; g_coeff is the factorial route.
inline TruncatedSeries g_series(int order, SeriesConvention conv = SeriesConvention::zero_constant) {
  if (order < 1) throw std::invalid_argument("g_series: order must be at least 1");
  TruncatedSeries g(order);
  if (includes_unit(conv)) g[0] = 1;
  BigInt c = 1;
  g[1] = 1;
  for (int n = 1; n < order; ++n) {
    const long m = n;
    c *= BigInt(4 * m + 5) * (4 * m + 4) * (4 * m + 3) * (4 * m + 2);
    c /= BigInt(m + 2) * (3 * m + 5) * (3 * m + 4) * (3 * m + 3);
    g[n + 1] = c;
  }
  return g;
}

/// The unique h with h(g(x)) = g(x) - x, i.e. h = (g - x) o revert(g).
///
/// Only the zero-constant convention admits this: under the Tutte form g has
/// a constant term and cannot be reverted. The defining identity is
/// recomputed before returning.
inline TruncatedSeries h_candidate(int order, SeriesConvention conv = SeriesConvention::zero_constant) {
  if (conv != SeriesConvention::zero_constant)
    throw UnsupportedConvention("h_candidate: the Tutte form of g has constant term 1 and has no compositional inverse");
  if (order < 2) throw std::invalid_argument("h_candidate: order must be at least 2");
  const TruncatedSeries g = g_series(order);
  const TruncatedSeries g_minus_x = g - identity_series(order);
  TruncatedSeries h = compose(g_minus_x, revert(g));
  if (!(compose(h, g) - g_minus_x).is_zero())
    throw ConsistencyFault("h_candidate: h(g(x)) - (g(x) - x) is not identically zero");
  return h;
}

/// (g - h)^2.
inline TruncatedSeries q_series(int order) {
  if (order < 2) throw std::invalid_argument("q_series: order must be at least 2");
  const TruncatedSeries d = g_series(order) - h_candidate(order);
  return mul(d, d);
}

/// g(x) - x^(2i+1).
inline TruncatedSeries gl_series(int order, int i) {
  if (i < 1) throw std::invalid_argument("gl_series: i must be positive");
  if (2 * i + 1 > order) throw std::invalid_argument("gl_series: 2i+1 exceeds the series order");
  TruncatedSeries g = g_series(order);
  g[2 * i + 1] -= 1;
  return g;
}

}  // namespace fourcol
