#ifndef ZDV_LOGMAG_HPP
#define ZDV_LOGMAG_HPP

// Extended-exponent magnitudes: sign plus a rigorous enclosure of log|x|.
//
// Internally the magnitude is kept in base 2 as (integer exponent k) +
// (fractional interval f), which keeps absolute errors near 1e-16 even for
// exponents of order 10^5; log10_abs() is derived on demand.  Values such
// as 10^-6926 or 2^22993 are exactly representable up to interval slack
// far below the 1e-6 per-operation budget.

#include "zdv/interval.hpp"

#include <cmath>
#include <cstdint>

namespace zdv {

namespace detail {
inline interval exp2_ivl(const interval& x) {
  auto r = libm_inc([](double v) { return std::exp2(v); }, x);
  if (r.lo < 0) r.lo = 0;
  return r;
}
inline const interval& log2_10() {
  static const auto v = interval::from_literal("3.321928094887362347870319429489390175865");
  return v;
}
} // namespace detail

struct logmag {
  int sign = 0;            // -1, 0, +1
  long long k = 0;         // integer part of log2|x|
  interval f{};            // fractional part, |f| kept <= ~1
  double hint = 0;         // exact mantissa when constructed from a double

  logmag() = default;

  static logmag zero() { return logmag{}; }

  static logmag from_double(double x) {
    logmag m;
    if (x == 0) return m;
    m.sign = x > 0 ? 1 : -1;
    int e = 0;
    double mant = std::frexp(std::abs(x), &e);  // mant in [0.5, 1)
    m.k = e;
    m.f = log2(interval(mant));
    m.hint = mant;
    m.normalize();
    return m;
  }

  static logmag from_interval(const interval& x) {
    if (x.contains_zero())
      throw std::domain_error("logmag of interval containing zero");
    logmag a = from_double(x.lo), b = from_double(x.hi);
    logmag m;
    m.sign = a.sign;
    m.k = a.k;
    long long shift = b.k - a.k;
    m.f = interval(a.f.lo, (interval(static_cast<double>(shift)) + b.f).hi);
    m.normalize();
    return m;
  }

  static logmag from_integer(long long n) {
    if (n == 0) return logmag{};
    return from_interval(interval::from_integer(n));
  }

  // x with log10(|x|) in l10, sign positive
  static logmag from_log10(const interval& l10) {
    logmag m;
    m.sign = 1;
    interval g = l10 * detail::log2_10();
    m.k = static_cast<long long>(std::floor(g.mid()));
    m.f = g - interval(static_cast<double>(m.k));
    m.normalize();
    return m;
  }

  void normalize() {
    while (f.mid() >= 1.0) { f -= interval(1.0); ++k; hint = 0; }
    while (f.mid() < -1.0) { f += interval(1.0); --k; hint = 0; }
  }

  interval log2_abs() const {
    if (sign == 0) throw std::domain_error("log of zero magnitude");
    return interval(static_cast<double>(k)) + f;
  }
  interval log10_abs() const { return log2_abs() * consts::log10_2<double>(); }
  interval ln_abs() const { return log2_abs() * consts::ln2<double>(); }

  double to_double() const {
    if (sign == 0) return 0;
    if (hint != 0 && k >= -1073 && k <= 1024)
      return sign * std::ldexp(hint, static_cast<int>(k));
    double l2 = static_cast<double>(k) + f.mid();
    return sign * std::exp2(l2);
  }

  // rigorous enclosure when the value fits a double
  interval enclosure() const {
    if (sign == 0) return interval(0.0);
    interval mag = detail::exp2_ivl(f);
    double lo = std::ldexp(mag.lo, static_cast<int>(k));
    double hi = std::ldexp(mag.hi, static_cast<int>(k));
    lo = detail::next_down(lo);
    hi = detail::next_up(hi);
    return sign > 0 ? interval(lo, hi) : interval(-hi, -lo);
  }

  logmag operator*(const logmag& o) const {
    logmag m;
    m.sign = sign * o.sign;
    if (m.sign == 0) return logmag{};
    m.k = k + o.k;
    m.f = f + o.f;
    m.normalize();
    return m;
  }

  logmag pow_integer(long long n) const {
    if (sign == 0) {
      if (n <= 0) throw std::domain_error("zero magnitude to nonpositive power");
      return logmag{};
    }
    if (sign < 0 && n % 2 == 0) { logmag m = pow_integer_mag(n); m.sign = 1; return m; }
    logmag m = pow_integer_mag(n);
    m.sign = sign < 0 ? (n % 2 ? -1 : 1) : 1;
    return m;
  }

  // |x|^e for interval exponent, sign must be positive
  logmag pow(const interval& e) const {
    if (sign <= 0) throw std::domain_error("logmag pow needs positive base");
    interval g = log2_abs() * e;
    logmag m;
    m.sign = 1;
    m.k = static_cast<long long>(std::floor(g.mid()));
    m.f = g - interval(static_cast<double>(m.k));
    m.normalize();
    return m;
  }

  // requires equal nonzero signs
  static logmag add_same_sign(const logmag& a, const logmag& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    if (a.sign != b.sign)
      throw std::domain_error("add_same_sign on opposite signs");
    const logmag *big = &a, *small = &b;
    if (cmp_mag(a, b) < 0) { big = &b; small = &a; }
    interval delta = small->log2_abs() - big->log2_abs();  // <= ~0
    logmag m = *big;
    m.hint = 0;
    if (delta.hi < -80) {
      m.f = m.f + interval(0.0, std::exp2(delta.hi + 1));
    } else {
      interval t = detail::exp2_ivl(delta);
      m.f = m.f + log1p(t) / consts::ln2<double>();
    }
    m.normalize();
    return m;
  }

  // a - b with |a| dominating |b|; throws if domination is not certified
  static logmag sub_dominant(const logmag& a, const logmag& b) {
    if (b.sign == 0) return a;
    if (a.sign == 0) { logmag m = b; m.sign = -m.sign; return m; }
    if (a.sign != b.sign) { logmag bb = b; bb.sign = -bb.sign; return add_same_sign(a, bb); }
    interval delta = b.log2_abs() - a.log2_abs();
    if (delta.hi >= -1e-9)
      throw std::domain_error("sub_dominant: magnitudes too close to cancel safely");
    logmag m = a;
    m.hint = 0;
    if (delta.hi < -80) {
      m.f = m.f + interval(-std::exp2(delta.hi + 1), 0.0);
    } else {
      interval t = detail::exp2_ivl(delta);
      m.f = m.f + log1p(-t) / consts::ln2<double>();
    }
    m.normalize();
    return m;
  }

  // -1, 0 (enclosures overlap), +1 comparing signed values
  static int compare(const logmag& a, const logmag& b) {
    if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
    if (a.sign == 0) return 0;
    int c = cmp_mag(a, b);
    return a.sign > 0 ? c : -c;
  }

 private:
  logmag pow_integer_mag(long long n) const {
    logmag m;
    m.sign = 1;
    m.k = k * n;
    m.f = f * interval::from_integer(n);
    m.normalize();
    return m;
  }
  static int cmp_mag(const logmag& a, const logmag& b) {
    interval la = a.log2_abs(), lb = b.log2_abs();
    if (la.hi < lb.lo) return -1;
    if (lb.hi < la.lo) return 1;
    return 0;
  }
};

} // namespace zdv

#endif
