#pragma once

// Exact truncated formal power series over BigRational.
//
// A TruncatedSeries of order N knows the coefficients of x^0 .. x^N and
// nothing beyond. Binary operations truncate to the smaller order, so a
// coefficient is never reported past the point where it is determined.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fourcol/big_rational.hpp"

namespace fourcol {

template <typename T>
struct Interval {
  T lower;
  T upper;

  bool contains(const T& v) const { return lower <= v && v <= upper; }
  T width() const { return upper - lower; }
};

class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}

  /// Zero series of the given order.
  explicit TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  TruncatedSeries(std::vector<BigRational> coeffs, int order) : TruncatedSeries(order) {
    if (coeffs.size() > coeffs_.size())
      throw std::invalid_argument("more coefficients than the series order allows");
    std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
  }

  int order() const noexcept { return order_; }

  const BigRational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  BigRational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  std::span<const BigRational> coefficients() const noexcept { return coeffs_; }

  /// Same series viewed at a lower order.
  TruncatedSeries truncated(int order) const {
    if (order > order_) throw std::invalid_argument("cannot raise the order of a truncated series");
    TruncatedSeries r(order);
    std::copy_n(coeffs_.begin(), order + 1, r.coeffs_.begin());
    return r;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return sgn(c) == 0; });
  }

  /// Index of the lowest nonzero coefficient, or -1 for the zero series.
  int valuation() const {
    for (int k = 0; k <= order_; ++k)
      if (sgn(coeffs_[k]) != 0) return k;
    return -1;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int order_ = 0;
  std::vector<BigRational> coeffs_;
};

inline TruncatedSeries make_series(std::vector<BigRational> coeffs, int order) {
  return TruncatedSeries(std::move(coeffs), order);
}

/// c * x^k to the given order (zero when k > order).
inline TruncatedSeries monomial(int k, int order, const BigRational& c = BigRational(1)) {
  TruncatedSeries r(order);
  if (k < 0) throw std::invalid_argument("negative exponent");
  if (k <= order) r[k] = c;
  return r;
}

inline TruncatedSeries identity_series(int order) { return monomial(1, order); }

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

inline TruncatedSeries negate(const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (int k = 0; k <= r.order(); ++k) r[k] = -a[k];
  return r;
}

inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

inline TruncatedSeries scale(const TruncatedSeries& a, const BigRational& c) {
  TruncatedSeries r(a.order());
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] * c;
  return r;
}

namespace detail {

/// Clears denominators: returns (D, v) with a[k] = v[k] / D for k <= order.
inline std::pair<BigInt, std::vector<BigInt>> integer_image(const TruncatedSeries& a, int order) {
  BigInt d = 1;
  for (int k = 0; k <= order; ++k)
    if (a[k].get_den() != 1) d = lcm(d, a[k].get_den());
  std::vector<BigInt> v(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    if (sgn(a[k]) == 0) continue;
    v[k] = a[k].get_num() * (d / a[k].get_den());
  }
  return {std::move(d), std::move(v)};
}

}  // namespace detail

/// Cauchy product to order min(Na, Nb). Denominators are cleared first so the
/// convolution runs over integers; the result is identical to the naive
/// rational convolution.
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  auto [da, va] = detail::integer_image(a, n);
  auto [db, vb] = detail::integer_image(b, n);
  int lo_a = 0, lo_b = 0, hi_a = n, hi_b = n;
  while (lo_a <= n && va[lo_a] == 0) ++lo_a;
  while (lo_b <= n && vb[lo_b] == 0) ++lo_b;
  while (hi_a >= 0 && va[hi_a] == 0) --hi_a;
  while (hi_b >= 0 && vb[hi_b] == 0) --hi_b;

  TruncatedSeries r(n);
  if (lo_a > n || lo_b > n) return r;
  const BigInt den = da * db;
  BigInt acc;
  for (int k = lo_a + lo_b; k <= n; ++k) {
    acc = 0;
    const int i_begin = std::max(lo_a, k - hi_b);
    const int i_end = std::min(hi_a, k - lo_b);
    for (int i = i_begin; i <= i_end; ++i) {
      if (va[i] == 0 || vb[k - i] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), va[i].get_mpz_t(), vb[k - i].get_mpz_t());
    }
    if (acc != 0) r[k] = make_rational(acc, den);
  }
  return r;
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

/// outer(inner(x)) by Horner accumulation. Requires inner(0) = 0.
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (sgn(inner[0]) != 0) throw std::invalid_argument("compose: inner series has a nonzero constant term");
  const int n = std::min(outer.order(), inner.order());
  const TruncatedSeries in = inner.truncated(n);
  TruncatedSeries acc(n);
  for (int k = n; k >= 0; --k) {
    if (k != n) acc = mul(acc, in);
    acc[0] += outer[k];
  }
  return acc;
}

/// Compositional inverse by order-by-order back-substitution.
///
/// With b = revert(a), the coefficient [x^k] a(b) depends on b_k only through
/// a_1 b_k; every other contribution comes from powers b^j (j >= 2) whose
/// k-th coefficient involves b_1 .. b_{k-1} only. A table of those power
/// coefficients is grown one column at a time.
inline TruncatedSeries revert(const TruncatedSeries& a) {
  if (a.order() < 1) throw std::invalid_argument("revert: order must be at least 1");
  if (sgn(a[0]) != 0) throw std::invalid_argument("revert: constant term must be zero");
  if (sgn(a[1]) == 0) throw std::invalid_argument("revert: linear coefficient must be nonzero");
  const int n = a.order();
  // pw[j][m] = [x^m] b^j, for 1 <= j <= m <= n.
  std::vector<std::vector<BigRational>> pw(static_cast<std::size_t>(n) + 1,
                                           std::vector<BigRational>(static_cast<std::size_t>(n) + 1));
  TruncatedSeries b(n);
  const BigRational inv_a1 = 1 / a[1];
  b[1] = inv_a1;
  pw[1][1] = inv_a1;
  for (int k = 2; k <= n; ++k) {
    BigRational rest = 0;
    for (int j = 2; j <= k; ++j) {
      BigRational c = 0;
      for (int i = 1; i <= k - j + 1; ++i) c += pw[1][i] * pw[j - 1][k - i];
      pw[j][k] = c;
      if (sgn(a[j]) != 0) rest += a[j] * c;
    }
    b[k] = -rest * inv_a1;
    pw[1][k] = b[k];
  }
  return b;
}

/// Enclosure of sum_n c_n p^n from the partial sum through the series order
/// and a geometric tail bound.
///
/// The caller asserts |c_{n+1} p / c_n| <= tail_ratio for every n >= order and
/// that the neglected terms are non-negative; under those assertions the true
/// value lies in [S, S + |c_N p^N| q / (1 - q)].
inline Interval<BigRational> eval_enclosure(const TruncatedSeries& a, const BigRational& point,
                                            const BigRational& tail_ratio) {
  if (sgn(point) < 0) throw std::invalid_argument("eval_enclosure: point must be non-negative");
  if (sgn(tail_ratio) < 0 || tail_ratio >= 1)
    throw std::invalid_argument("eval_enclosure: tail ratio must lie in [0, 1)");
  BigRational sum = 0;
  for (int k = a.order(); k >= 0; --k) sum = sum * point + a[k];
  const BigRational last = abs(a[a.order()] * pow(point, static_cast<unsigned long>(a.order())));
  const BigRational tail = last * tail_ratio / (1 - tail_ratio);
  return {sum, sum + tail};
}

}  // namespace fourcol
