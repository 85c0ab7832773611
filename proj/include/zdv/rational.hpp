#ifndef ZDV_RATIONAL_HPP
#define ZDV_RATIONAL_HPP

// Exact rationals over 128-bit integers, for quantities the source text
// states exactly (1 + 10^-7, 323707/20, 132/10^20, ...).  Deliberately
// minimal: construction, ring ops, comparison, decimal rendering.

#include "zdv/interval.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zdv {

struct rat {
  __int128 num = 0;
  __int128 den = 1;

  rat() = default;
  rat(long long n) : num(n), den(1) {}
  rat(long long n, long long d) : num(n), den(d) { normalize(); }
  rat(__int128 n, __int128 d) : num(n), den(d) { normalize(); }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { __int128 t = a % b; a = b; b = t; }
    return a;
  }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    __int128 g = gcd128(num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  static rat pow10(int e) {
    rat r(1);
    __int128 p = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= 10;
    if (e >= 0) r.num = p; else r.den = p;
    return r;
  }

  rat operator+(const rat& o) const { return rat(num * o.den + o.num * den, den * o.den); }
  rat operator-(const rat& o) const { return rat(num * o.den - o.num * den, den * o.den); }
  rat operator*(const rat& o) const { return rat(num * o.num, den * o.den); }
  rat operator/(const rat& o) const {
    if (o.num == 0) throw std::domain_error("rational division by zero");
    return rat(num * o.den, den * o.num);
  }
  bool operator==(const rat& o) const { return num == o.num && den == o.den; }
  bool operator<(const rat& o) const { return num * o.den < o.num * den; }
  bool operator<=(const rat& o) const { return num * o.den <= o.num * den; }

  template <class T = double> basic_interval<T> enclosure() const {
    auto cvt = [](__int128 v) {
      // split into two 64-bit halves, each exactly representable
      bool neg = v < 0;
      if (neg) v = -v;
      T hi = static_cast<T>(static_cast<std::uint64_t>(v >> 64));
      T lo = static_cast<T>(static_cast<std::uint64_t>(v));
      basic_interval<T> two64(T(18446744073709551616.0));
      basic_interval<T> r = basic_interval<T>(hi) * two64 + basic_interval<T>(lo);
      return neg ? -r : r;
    };
    return cvt(num) / cvt(den);
  }

  static std::string int128_str(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) { s.insert(s.begin(), char('0' + int(u % 10))); u /= 10; }
    return neg ? "-" + s : s;
  }

  std::string str() const {
    if (den == 1) return int128_str(num);
    return int128_str(num) + "/" + int128_str(den);
  }
};

} // namespace zdv

#endif
