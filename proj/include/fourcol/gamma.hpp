#pragma once

// Gamma function at multiple precision.
//
// Half-integers and positive integers take an exact path (a rational multiple
// of sqrt(pi), or a factorial). Everything else uses Spouge's approximation,
//
//   Gamma(z+1) = (z+a)^(z+1/2) e^-(z+a) [ c0 + sum_{k=1}^{a-1} c_k / (z+k) ] (1 + eps),
//
// whose relative error is below a^(-1/2) (2 pi)^-(a+1/2) for z > 0. The
// parameter a is sized so that this bound is under 10^-(digits+2).

#include <cmath>
#include <optional>
#include <stdexcept>

#include "fourcol/big_rational.hpp"
#include "fourcol/high_precision.hpp"

namespace fourcol {

/// For alpha = m + 1/2 (any integer m), the rational c with Gamma(alpha) = c sqrt(pi).
inline std::optional<BigRational> gamma_half_integer_factor(const BigRational& alpha) {
  if (alpha.get_den() != 2) return std::nullopt;
  // alpha = (2m+1)/2
  const BigInt twice_m = alpha.get_num() - 1;
  const long m = twice_m.get_si() / 2;
  BigRational c = 1;
  if (m >= 0) {
    for (long k = 0; k < m; ++k) c *= make_rational(2 * k + 1, 2);  // Gamma(z+1) = z Gamma(z)
  } else {
    for (long k = -1; k >= m; --k) c /= make_rational(2 * k + 1, 2);  // Gamma(z) = Gamma(z+1) / z
  }
  return c;
}

namespace detail {

inline bool is_pole(const Real& alpha) { return alpha <= 0 && alpha == floor(alpha); }

/// Spouge evaluation of Gamma(z + 1) for z >= 0.
inline Real spouge_gamma_plus_one(const Real& z, int digits) {
  const int a = static_cast<int>(std::ceil((digits + 2) * std::log(10.0) / std::log(2.0 * M_PI))) + 1;
  const Real two_pi = 2 * pi_real();
  Real sum = sqrt(two_pi);
  Real factorial_km1 = 1;  // (k-1)!
  for (int k = 1; k < a; ++k) {
    if (k > 1) factorial_km1 *= (k - 1);
    Real c = pow(Real(a - k), Real(k) - Real(0.5)) * exp(Real(a - k)) / factorial_km1;
    if (k % 2 == 0) c = -c;
    sum += c / (z + k);
  }
  return pow(z + a, z + Real(0.5)) * exp(-(z + a)) * sum;
}

}  // namespace detail

/// Gamma(alpha) to `digits` significant digits. Throws std::domain_error at
/// the poles 0, -1, -2, ...
inline HighPrecisionReal gamma_real(const Real& alpha_in, int digits = 50) {
  if (detail::is_pole(alpha_in)) throw std::domain_error("gamma_real: pole at a non-positive integer");
  const int work = 2 * digits + 20;  // Spouge's coefficients alternate and cancel
  Real result;
  {
    PrecisionScope scope(static_cast<unsigned>(work));
    Real alpha(alpha_in);
    Real shift = 1;
    while (alpha < 1) {
      shift *= alpha;
      alpha += 1;
    }
    result = detail::spouge_gamma_plus_one(alpha - 1, digits) / shift;
  }
  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  return {Real(result), default_error_bound(digits), digits};
}

/// Rational-argument overload with exact shortcuts at integers and half-integers.
inline HighPrecisionReal gamma_real(const BigRational& alpha, int digits = 50) {
  PrecisionScope scope(static_cast<unsigned>(digits + 10));
  if (is_integer(alpha)) {
    if (sgn(alpha) <= 0) throw std::domain_error("gamma_real: pole at a non-positive integer");
    const BigInt n = alpha.get_num();
    return {to_real(factorial(n.get_ui() - 1)), default_error_bound(digits), digits};
  }
  if (auto c = gamma_half_integer_factor(alpha)) {
    return {to_real(*c) * sqrt(pi_real()), default_error_bound(digits), digits};
  }
  return gamma_real(to_real(alpha), digits);
}

}  // namespace fourcol
