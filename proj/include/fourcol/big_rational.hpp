#pragma once

#include <gmpxx.h>

#include <string>

namespace fourcol {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact rational; gmpxx keeps every result in lowest terms with positive
/// denominator, as long as constructed values are canonicalized.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigRational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

/// Renders "p/q", or "p" when the denominator is 1.
inline std::string to_string(const BigRational& q) { return q.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigRational pow(const BigRational& base, unsigned long e) {
  return make_rational(pow(BigInt(base.get_num()), e), pow(BigInt(base.get_den()), e));
}

}  // namespace fourcol
