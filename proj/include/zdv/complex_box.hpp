#ifndef ZDV_COMPLEX_BOX_HPP
#define ZDV_COMPLEX_BOX_HPP

// Rectangular complex enclosures: independent interval real and imaginary
// parts.  Not the tightest possible complex arithmetic (rotation inflates a
// rectangle) but closed under all operations used here.

#include "zdv/interval.hpp"

#include <complex>
#include <optional>

namespace zdv {

struct cbox {
  interval re, im;

  cbox() = default;
  cbox(interval r, interval i) : re(r), im(i) {}
  explicit cbox(double r, double i = 0) : re(r), im(i) {}
  explicit cbox(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  static cbox point(double r, double i) { return cbox(interval(r), interval(i)); }

  std::complex<double> mid() const { return {re.mid(), im.mid()}; }
  bool contains(std::complex<double> z) const {
    return re.contains(z.real()) && im.contains(z.imag());
  }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  double max_width() const { return std::max(re.width(), im.width()); }

  cbox conj() const { return cbox(re, -im); }
  cbox operator-() const { return cbox(-re, -im); }
  cbox operator+(const cbox& o) const { return cbox(re + o.re, im + o.im); }
  cbox operator-(const cbox& o) const { return cbox(re - o.re, im - o.im); }
  cbox operator*(const cbox& o) const {
    return cbox(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  cbox operator*(const interval& s) const { return cbox(re * s, im * s); }
  cbox operator/(const interval& s) const { return cbox(re / s, im / s); }
  cbox operator/(const cbox& o) const {
    interval n = o.norm();
    if (n.contains_zero())
      throw std::domain_error("cbox division by box containing zero");
    cbox num = *this * o.conj();
    return cbox(num.re / n, num.im / n);
  }
  cbox& operator+=(const cbox& o) { re += o.re; im += o.im; return *this; }
  cbox& operator-=(const cbox& o) { re -= o.re; im -= o.im; return *this; }
  cbox& operator*=(const cbox& o) { return *this = *this * o; }

  interval norm() const { return pown(re, 2) + pown(im, 2); }
  interval abs() const { return sqrt(norm()); }
  std::optional<interval> arg() const { return atan2_box(im, re); }
  cbox widened(int ulps) const { return cbox(re.widened(ulps), im.widened(ulps)); }
};

inline cbox operator*(const interval& s, const cbox& z) { return z * s; }

inline cbox exp(const cbox& z) {
  interval m = exp(z.re);
  return cbox(m * cos(z.im), m * sin(z.im));
}

// principal log; needs 0 excluded and no branch-cut straddle
inline std::optional<cbox> log(const cbox& z) {
  interval n = z.norm();
  if (n.contains_zero()) return std::nullopt;
  auto a = z.arg();
  if (!a) return std::nullopt;
  return cbox(log(n) / interval(2.0), *a);
}

inline cbox pow(const cbox& z, const cbox& w) {
  auto l = log(z);
  if (!l) throw std::domain_error("cbox pow: base box touches zero or the cut");
  return exp(w * *l);
}

// z^n by repeated squaring
inline cbox pown(cbox z, long long n) {
  if (n < 0) return cbox(interval(1.0), interval(0.0)) / pown(z, -n);
  cbox acc(interval(1.0), interval(0.0));
  while (n) {
    if (n & 1) acc *= z;
    n >>= 1;
    if (n) z *= z;
  }
  return acc;
}

inline std::string to_string(const cbox& z) {
  return to_string(z.re) + " + i*" + to_string(z.im);
}

} // namespace zdv

#endif
