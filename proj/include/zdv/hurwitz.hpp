#ifndef ZDV_HURWITZ_HPP
#define ZDV_HURWITZ_HPP

// Hurwitz zeta via Euler-Maclaurin with a rigorous remainder.
//
// The evaluation is split so the simple pole can be cancelled exactly across
// a character sum:
//
//   zeta(s,x) = finite + 1/(s-1) + pole_comp + rest
//
// where finite = sum_{m<N} (m+x)^{-s}, pole_comp = ((N+x)^{1-s} - 1)/(s-1)
// (removable at s = 1), and rest carries the half term, the Bernoulli
// corrections and the remainder box.  The remainder after K corrections is
// bounded by |(s)_{2K+1}| * 4/(2pi)^{2K+1} * (N+x)^{-sigma-2K} / (sigma+2K),
// from the periodic-Bernoulli integral form, valid for sigma + 2K > 0.

#include "zdv/bernoulli.hpp"
#include "zdv/complex_box.hpp"
#include "zdv/interval.hpp"

#include <complex>
#include <stdexcept>

namespace zdv {

namespace detail {

// (e^w - 1)/w with the removable singularity at 0 handled by series
inline cbox expm1_over(const cbox& w) {
  interval wmag = w.abs();
  if (w.contains_zero() || wmag.hi <= 0.5) {
    if (wmag.hi > 2.0)
      throw std::domain_error("expm1_over: box straddles 0 but is too wide");
    cbox acc(interval(1.0), interval(0.0));
    cbox pw(interval(1.0), interval(0.0));
    for (int j = 1; j <= 10; ++j) {
      pw = pw * w;
      acc += pw / factorial_interval(j + 1);
    }
    // tail: sum_{j>10} |w|^j/(j+1)! <= |w|^11/12! * 2; the term ratio past
    // j = 10 is |w|/12 <= 1/6, so the geometric factor stays below 2
    interval tail = pown(interval(0.0, wmag.hi), 11) / factorial_interval(12) * interval(2.0);
    interval slack(-tail.hi, tail.hi);
    acc.re += slack;
    acc.im += slack;
    return acc;
  }
  return (exp(w) - cbox(interval(1.0), interval(0.0))) / w;
}

} // namespace detail

struct em_split {
  cbox finite;     // sum_{m=0}^{N-1} (m+x)^{-s}
  cbox pole_comp;  // ((N+x)^{1-s} - 1)/(s-1)
  cbox rest;       // half term + corrections + remainder
};

// building blocks of zeta(s,x) for x in (0,1]; the caller adds 1/(s-1)
inline em_split hurwitz_parts(const cbox& s, const interval& x, long long N, int K) {
  if (!(x.lo > 0.0) || x.hi > 1.0)
    throw std::invalid_argument("hurwitz_parts: x must lie in (0,1]");
  if (N < 10) throw std::invalid_argument("hurwitz_parts: need N >= 10");
  if (K < 1 || K > 20) throw std::invalid_argument("hurwitz_parts: K in [1,20]");
  if (s.re.lo <= -2.0 * K + 1.0)
    throw std::invalid_argument("hurwitz_parts: Re s too small for this K");

  em_split out;
  out.finite = cbox(interval(0.0), interval(0.0));
  for (long long m = 0; m < N; ++m) {
    interval lmx = log(interval::from_integer(m) + x);
    out.finite += exp(s * cbox(-lmx, interval(0.0)));
  }

  interval y = interval::from_integer(N) + x;
  interval ly = log(y);
  cbox u = s - cbox(interval(1.0), interval(0.0));  // s - 1
  out.pole_comp = detail::expm1_over(u * cbox(-ly, interval(0.0))) * (-ly);

  cbox ypow = exp(s * cbox(-ly, interval(0.0)));  // (N+x)^{-s}
  out.rest = ypow * interval(0.5);

  cbox yinv2(interval(1.0) / pown(y, 2), interval(0.0));
  cbox poch = s;                                         // (s)_1
  cbox pw = ypow * cbox(interval(1.0) / y, interval(0.0));  // (N+x)^{-s-1}
  for (int k = 1; k <= K; ++k) {
    interval coef = bernoulli_even(k) / factorial_interval(2 * k);
    out.rest += coef * (poch * pw);
    // advance (s)_{2k-1} -> (s)_{2k+1} and power -s-2k+1 -> -s-2k-1
    cbox j1(interval::from_integer(2 * k - 1), interval(0.0));
    cbox j2(interval::from_integer(2 * k), interval(0.0));
    poch = poch * (s + j1) * (s + j2);
    pw = pw * yinv2;
  }

  interval sigma_lo(s.re.lo);
  interval denom = sigma_lo + interval::from_integer(2 * K);
  interval two_pi = consts::pi<double>() * interval(2.0);
  interval rem = poch.abs() * interval(4.0) / pown(two_pi, 2 * K + 1);
  rem = rem * exp(-(sigma_lo + interval::from_integer(2 * K)) * ly) / denom;
  interval slack(-rem.hi, rem.hi);
  out.rest.re += slack;
  out.rest.im += slack;
  return out;
}

// full Hurwitz zeta; the s box must exclude the pole at 1
inline cbox hurwitz_zeta(const cbox& s, const interval& x, long long N, int K) {
  if (s.re.contains(1.0) && s.im.contains(0.0))
    throw std::domain_error("hurwitz_zeta: s box contains the pole at 1");
  em_split p = hurwitz_parts(s, x, N, K);
  cbox pole = cbox(interval(1.0), interval(0.0)) /
              (s - cbox(interval(1.0), interval(0.0)));
  return p.finite + pole + p.pole_comp + p.rest;
}

// non-rigorous double-precision mirror of hurwitz_parts for exploration scans
struct em_split_approx {
  std::complex<double> finite, pole_comp, rest;
};

inline em_split_approx hurwitz_parts_approx(std::complex<double> s, double x,
                                            long long N, int K) {
  em_split_approx out{};
  for (long long m = 0; m < N; ++m)
    out.finite += std::exp(-s * std::log(double(m) + x));
  double y = double(N) + x;
  double ly = std::log(y);
  std::complex<double> u = s - 1.0;
  std::complex<double> w = -u * ly;
  out.pole_comp = (std::abs(w) < 1e-6)
                      ? -ly * (1.0 + w / 2.0 + w * w / 6.0)
                      : (std::exp(w) - 1.0) / u;
  std::complex<double> ypow = std::exp(-s * ly);
  out.rest = 0.5 * ypow;
  std::complex<double> poch = s;
  std::complex<double> pw = ypow / y;
  static const double coef_cache[] = {0,  // B_{2k}/(2k)!
      1.0 / 12,       -1.0 / 720,              1.0 / 30240,    -1.0 / 1209600,
      1.0 / 47900160, -5.284190138687493e-10,  1.0 / 74724249600.0};
  for (int k = 1; k <= K && k <= 7; ++k) {
    out.rest += coef_cache[k] * poch * pw;
    poch *= (s + std::complex<double>(2.0 * k - 1)) * (s + std::complex<double>(2.0 * k));
    pw /= y * y;
  }
  return out;
}

} // namespace zdv

#endif
