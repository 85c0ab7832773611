#ifndef ZDV_INTERVAL_HPP
#define ZDV_INTERVAL_HPP

// Directed-rounded interval arithmetic on IEEE endpoints.
//
// Exact operations (+,-,*,/,sqrt) are rounded outward only when inexact,
// detected through error-free transformations (TwoSum, FMA residuals), so
// results that are exactly representable stay exact.  libm calls are not
// correctly rounded in general and get a fixed outward ulp slack instead.
// Rounding mode is never changed; everything runs in round-to-nearest.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace zdv {

namespace detail {

template <class T> inline T next_down(T x) {
  return std::nextafter(x, -std::numeric_limits<T>::infinity());
}
template <class T> inline T next_up(T x) {
  return std::nextafter(x, std::numeric_limits<T>::infinity());
}

// ulp slack applied around libm results; double libm in glibc is faithful
// (< 1 ulp), the wider margin on long double covers its weaker guarantees.
template <class T> constexpr int libm_slack = 2;
template <> inline constexpr int libm_slack<long double> = 4;

template <class T> inline T step_down(T x, int n) {
  for (int i = 0; i < n; ++i) x = next_down(x);
  return x;
}
template <class T> inline T step_up(T x, int n) {
  for (int i = 0; i < n; ++i) x = next_up(x);
  return x;
}

// TwoSum: s = fl(a+b), err = a+b-s exactly.
template <class T> inline T two_sum_err(T a, T b, T s) {
  T z = s - a;
  return (a - (s - z)) + (b - z);
}

template <class T> inline T add_down(T a, T b) {
  T s = a + b, e = two_sum_err(a, b, s);
  return e < 0 ? next_down(s) : s;
}
template <class T> inline T add_up(T a, T b) {
  T s = a + b, e = two_sum_err(a, b, s);
  return e > 0 ? next_up(s) : s;
}
template <class T> inline T sub_down(T a, T b) { return add_down(a, -b); }
template <class T> inline T sub_up(T a, T b) { return add_up(a, -b); }

template <class T> inline T mul_down(T a, T b) {
  T p = a * b, e = std::fma(a, b, -p);
  return e < 0 ? next_down(p) : p;
}
template <class T> inline T mul_up(T a, T b) {
  T p = a * b, e = std::fma(a, b, -p);
  return e > 0 ? next_up(p) : p;
}

// a/b = q + (a - q b)/b; the FMA residual gives the sign of the correction.
template <class T> inline T div_down(T a, T b) {
  T q = a / b, r = std::fma(q, b, -a);
  if (r == 0) return q;
  return ((r > 0) == (b > 0)) ? next_down(q) : q;
}
template <class T> inline T div_up(T a, T b) {
  T q = a / b, r = std::fma(q, b, -a);
  if (r == 0) return q;
  return ((r < 0) == (b > 0)) ? next_up(q) : q;
}

template <class T> inline T sqrt_down(T a) {
  T q = std::sqrt(a), r = std::fma(q, q, -a);
  return r > 0 ? next_down(q) : q;
}
template <class T> inline T sqrt_up(T a) {
  T q = std::sqrt(a), r = std::fma(q, q, -a);
  return r < 0 ? next_up(q) : q;
}

template <class T> inline T parse_literal(const char* s) {
  if constexpr (std::is_same_v<T, long double>) return strtold(s, nullptr);
  else return strtod(s, nullptr);
}

} // namespace detail

template <class T> struct basic_interval {
  T lo, hi;

  basic_interval() : lo(0), hi(0) {}
  explicit basic_interval(T point) : lo(point), hi(point) { check(); }
  basic_interval(T l, T h) : lo(l), hi(h) { check(); }

  void check() const {
    if (!(lo <= hi))
      throw std::invalid_argument("interval: endpoints out of order or NaN");
  }

  static basic_interval from_literal(const char* s) {
    T v = detail::parse_literal<T>(s);
    // strtod/strtold are correctly rounded, one outward ulp covers it
    return basic_interval(detail::next_down(v), detail::next_up(v));
  }
  // exact if the integer fits the mantissa, otherwise outward rounded
  static basic_interval from_integer(long long n) {
    T v = static_cast<T>(n);
    long long back = static_cast<long long>(v);
    if (back == n) return basic_interval(v);
    return basic_interval(detail::next_down(v), detail::next_up(v));
  }
  static basic_interval ratio(long long num, long long den) {
    return from_integer(num) / from_integer(den);
  }
  static basic_interval hull(const basic_interval& a, const basic_interval& b) {
    return basic_interval(a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi);
  }

  T width() const { return detail::sub_up(hi, lo); }
  T mid() const { return lo + (hi - lo) / 2; }
  T mag() const { T a = std::abs(lo), b = std::abs(hi); return a > b ? a : b; }
  T mig() const {  // minimal absolute value over the interval
    if (lo <= 0 && 0 <= hi) return 0;
    T a = std::abs(lo), b = std::abs(hi);
    return a < b ? a : b;
  }
  bool contains(T x) const { return lo <= x && x <= hi; }
  bool contains(const basic_interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool intersects(const basic_interval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool strictly_less(const basic_interval& o) const { return hi < o.lo; }

  basic_interval widened(int ulps) const {
    return basic_interval(detail::step_down(lo, ulps), detail::step_up(hi, ulps));
  }

  basic_interval operator-() const { return basic_interval(-hi, -lo); }

  basic_interval operator+(const basic_interval& o) const {
    return basic_interval(detail::add_down(lo, o.lo), detail::add_up(hi, o.hi));
  }
  basic_interval operator-(const basic_interval& o) const {
    return basic_interval(detail::sub_down(lo, o.hi), detail::sub_up(hi, o.lo));
  }
  basic_interval operator*(const basic_interval& o) const {
    using namespace detail;
    T d1 = mul_down(lo, o.lo), d2 = mul_down(lo, o.hi),
      d3 = mul_down(hi, o.lo), d4 = mul_down(hi, o.hi);
    T u1 = mul_up(lo, o.lo), u2 = mul_up(lo, o.hi),
      u3 = mul_up(hi, o.lo), u4 = mul_up(hi, o.hi);
    T l = d1, h = u1;
    if (d2 < l) l = d2;
    if (d3 < l) l = d3;
    if (d4 < l) l = d4;
    if (u2 > h) h = u2;
    if (u3 > h) h = u3;
    if (u4 > h) h = u4;
    return basic_interval(l, h);
  }
  basic_interval operator/(const basic_interval& o) const {
    if (o.contains_zero())
      throw std::domain_error("interval division by interval containing zero");
    using namespace detail;
    T d1 = div_down(lo, o.lo), d2 = div_down(lo, o.hi),
      d3 = div_down(hi, o.lo), d4 = div_down(hi, o.hi);
    T u1 = div_up(lo, o.lo), u2 = div_up(lo, o.hi),
      u3 = div_up(hi, o.lo), u4 = div_up(hi, o.hi);
    T l = d1, h = u1;
    if (d2 < l) l = d2;
    if (d3 < l) l = d3;
    if (d4 < l) l = d4;
    if (u2 > h) h = u2;
    if (u3 > h) h = u3;
    if (u4 > h) h = u4;
    return basic_interval(l, h);
  }
  basic_interval& operator+=(const basic_interval& o) { return *this = *this + o; }
  basic_interval& operator-=(const basic_interval& o) { return *this = *this - o; }
  basic_interval& operator*=(const basic_interval& o) { return *this = *this * o; }
  basic_interval& operator/=(const basic_interval& o) { return *this = *this / o; }
};

using interval = basic_interval<double>;
using wide_interval = basic_interval<long double>;

template <class T>
inline basic_interval<T> operator+(T a, const basic_interval<T>& b) { return basic_interval<T>(a) + b; }
template <class T>
inline basic_interval<T> operator*(T a, const basic_interval<T>& b) { return basic_interval<T>(a) * b; }
template <class T>
inline basic_interval<T> operator-(T a, const basic_interval<T>& b) { return basic_interval<T>(a) - b; }

template <class T>
inline std::optional<basic_interval<T>> intersect(const basic_interval<T>& a,
                                                  const basic_interval<T>& b) {
  T l = a.lo > b.lo ? a.lo : b.lo;
  T h = a.hi < b.hi ? a.hi : b.hi;
  if (l > h) return std::nullopt;
  return basic_interval<T>(l, h);
}

template <class T> inline basic_interval<T> abs(const basic_interval<T>& x) {
  if (x.lo >= 0) return x;
  if (x.hi <= 0) return -x;
  return basic_interval<T>(T(0), x.mag());
}

template <class T> inline basic_interval<T> sqrt(const basic_interval<T>& x) {
  if (x.lo < 0) throw std::domain_error("interval sqrt of negative value");
  return basic_interval<T>(detail::sqrt_down(x.lo), detail::sqrt_up(x.hi));
}

namespace detail {
// monotone increasing libm function applied endpoint-wise with slack
template <class T, class F> inline basic_interval<T> libm_inc(F f, const basic_interval<T>& x) {
  T l = step_down(f(x.lo), libm_slack<T>);
  T h = step_up(f(x.hi), libm_slack<T>);
  if (std::isnan(l) || std::isnan(h)) throw std::domain_error("libm returned NaN");
  return basic_interval<T>(l, h);
}
} // namespace detail

template <class T> inline basic_interval<T> exp(const basic_interval<T>& x) {
  auto r = detail::libm_inc([](T v) { return std::exp(v); }, x);
  if (std::isinf(r.hi)) throw std::range_error("interval exp overflow");
  if (r.lo < 0) r.lo = 0;
  return r;
}
template <class T> inline basic_interval<T> expm1(const basic_interval<T>& x) {
  return detail::libm_inc([](T v) { return std::expm1(v); }, x);
}
template <class T> inline basic_interval<T> log(const basic_interval<T>& x) {
  if (x.lo <= 0) throw std::domain_error("interval log needs positive argument");
  return detail::libm_inc([](T v) { return std::log(v); }, x);
}
template <class T> inline basic_interval<T> log1p(const basic_interval<T>& x) {
  if (x.lo <= -1) throw std::domain_error("interval log1p out of domain");
  return detail::libm_inc([](T v) { return std::log1p(v); }, x);
}
template <class T> inline basic_interval<T> log2(const basic_interval<T>& x) {
  if (x.lo <= 0) throw std::domain_error("interval log2 needs positive argument");
  return detail::libm_inc([](T v) { return std::log2(v); }, x);
}
template <class T> inline basic_interval<T> atan(const basic_interval<T>& x) {
  return detail::libm_inc([](T v) { return std::atan(v); }, x);
}

template <class T> inline basic_interval<T> pown(basic_interval<T> x, long long n) {
  if (n == 0) return basic_interval<T>(T(1));
  if (n < 0) return basic_interval<T>(T(1)) / pown(x, -n);
  if (n % 2 == 0 && x.contains_zero()) {
    // even power of a sign-changing interval: [0, max(|lo|,|hi|)^n]
    basic_interval<T> m(T(0), x.mag());
    basic_interval<T> acc(T(1)), base = m;
    long long k = n;
    while (k) {
      if (k & 1) acc *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return basic_interval<T>(T(0), acc.hi);
  }
  basic_interval<T> acc(T(1)), base = x;
  long long k = n;
  while (k) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

template <class T>
inline basic_interval<T> pow(const basic_interval<T>& base, const basic_interval<T>& e) {
  return exp(e * log(base));
}

// mathematical constants, enclosed from 40 digit literals
namespace consts {
template <class T> inline const basic_interval<T>& pi() {
  static const auto v = basic_interval<T>::from_literal("3.141592653589793238462643383279502884197");
  return v;
}
template <class T> inline const basic_interval<T>& e() {
  static const auto v = basic_interval<T>::from_literal("2.718281828459045235360287471352662497757");
  return v;
}
template <class T> inline const basic_interval<T>& ln2() {
  static const auto v = basic_interval<T>::from_literal("0.6931471805599453094172321214581765680755");
  return v;
}
template <class T> inline const basic_interval<T>& ln10() {
  static const auto v = basic_interval<T>::from_literal("2.302585092994045684017991454684364207601");
  return v;
}
// 30+ digit Euler-Mascheroni enclosure, pre-verified against the classical expansion
template <class T> inline const basic_interval<T>& euler_gamma() {
  static const auto v = basic_interval<T>::from_literal("0.5772156649015328606065120900824024310422");
  return v;
}
template <class T> inline const basic_interval<T>& log10_2() {
  static const auto v = basic_interval<T>::from_literal("0.3010299956639811952137388947244930267682");
  return v;
}
template <class T> inline const basic_interval<T>& log10_3() {
  static const auto v = basic_interval<T>::from_literal("0.4771212547196624372950279032551153092001");
  return v;
}
template <class T> inline const basic_interval<T>& log10_7() {
  static const auto v = basic_interval<T>::from_literal("0.8450980400142568307122162585926361934836");
  return v;
}
template <class T> inline const basic_interval<T>& log10_e() {
  static const auto v = basic_interval<T>::from_literal("0.4342944819032518276511289189166050822944");
  return v;
}
} // namespace consts

namespace detail {
// does x contain a point of the lattice { phase + k*step : k integer }?
// conservative: may answer yes near the boundary, never a false no.
template <class T>
inline bool meets_lattice(const basic_interval<T>& x, const basic_interval<T>& step,
                          const basic_interval<T>& phase) {
  basic_interval<T> k = (x - phase) / step;
  return std::floor(k.hi) >= std::ceil(k.lo);
}
} // namespace detail

template <class T> inline basic_interval<T> cos(const basic_interval<T>& x) {
  const auto& pi = consts::pi<T>();
  basic_interval<T> two_pi = T(2) * pi;
  if (x.width() >= two_pi.hi) return basic_interval<T>(T(-1), T(1));
  T c1 = detail::step_down(std::cos(x.lo), detail::libm_slack<T>);
  T c2 = detail::step_down(std::cos(x.hi), detail::libm_slack<T>);
  T C1 = detail::step_up(std::cos(x.lo), detail::libm_slack<T>);
  T C2 = detail::step_up(std::cos(x.hi), detail::libm_slack<T>);
  T l = c1 < c2 ? c1 : c2;
  T h = C1 > C2 ? C1 : C2;
  if (detail::meets_lattice(x, two_pi, basic_interval<T>(T(0)))) h = 1;
  if (detail::meets_lattice(x, two_pi, pi)) l = -1;
  if (l < -1) l = -1;
  if (h > 1) h = 1;
  return basic_interval<T>(l, h);
}
template <class T> inline basic_interval<T> sin(const basic_interval<T>& x) {
  return cos(x - consts::pi<T>() / basic_interval<T>(T(2)));
}

// arg over a rectangle that excludes the origin and the branch cut
// (negative real axis).  Extremes of arg over a convex region lie at
// corners, so four directed atan2 evaluations bound it.
template <class T>
inline std::optional<basic_interval<T>>
atan2_box(const basic_interval<T>& y, const basic_interval<T>& x) {
  if (x.contains_zero() && y.contains_zero()) return std::nullopt;
  if (y.contains_zero() && x.lo < 0) return std::nullopt;  // meets the cut
  T corners[4][2] = {{y.lo, x.lo}, {y.lo, x.hi}, {y.hi, x.lo}, {y.hi, x.hi}};
  T l = std::numeric_limits<T>::infinity(), h = -l;
  for (auto& c : corners) {
    T a = std::atan2(c[0], c[1]);
    T ad = detail::step_down(a, detail::libm_slack<T>);
    T au = detail::step_up(a, detail::libm_slack<T>);
    if (ad < l) l = ad;
    if (au > h) h = au;
  }
  return basic_interval<T>(l, h);
}

template <class T> inline std::string to_string(const basic_interval<T>& x) {
  char buf[96];
  if constexpr (std::is_same_v<T, long double>)
    snprintf(buf, sizeof buf, "[%.21Lg, %.21Lg]", x.lo, x.hi);
  else
    snprintf(buf, sizeof buf, "[%.17g, %.17g]", x.lo, x.hi);
  return buf;
}

} // namespace zdv

#endif
