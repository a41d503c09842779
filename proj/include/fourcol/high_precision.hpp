#pragma once

// Multiple-precision reals (MPFR through Boost.Multiprecision) and the
// conversions the asymptotic code needs.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <sstream>
#include <string>

#include "fourcol/big_rational.hpp"

namespace fourcol {

using Real = boost::multiprecision::mpfr_float;

/// Sets the default MPFR precision (decimal digits) for the enclosing scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision()) { Real::default_precision(digits); }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// A real value with a bound on its relative error.
struct HighPrecisionReal {
  Real value;
  Real relative_error;
  int digits = 50;

  double to_double() const { return value.convert_to<double>(); }
};

/// Relative error bound attached to values computed at `digits` working
/// digits: 10^(2 - digits).
inline Real default_error_bound(int digits) { return pow(Real(10), 2 - digits); }

inline Real to_real(const BigRational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

inline Real to_real(const BigInt& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

inline Real pi_real() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

/// Scientific notation with the requested number of significant figures.
inline std::string format_real(const Real& x, int significant) {
  std::ostringstream os;
  os.precision(significant - 1);
  os << std::scientific << x;
  return os.str();
}

inline std::string format_real(double x, int significant) {
  std::ostringstream os;
  os.precision(significant - 1);
  os << std::scientific << x;
  return os.str();
}

}  // namespace fourcol
