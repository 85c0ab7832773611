#ifndef ZDV_GAMMA_HPP
#define ZDV_GAMMA_HPP

// log Gamma and digamma enclosures on the right half plane.
//
// Both use the Stirling asymptotic series after shifting the argument to
// Re >= 12 by the recurrence.  The truncation error after J terms is bounded
// by the first omitted term times sec(theta/2)^p with theta the maximal
// argument over the box (p = 2J+2 for log Gamma, taken as 2J+4 with an extra
// factor 2 for digamma to stay on the safe side of the published constants).

#include "zdv/bernoulli.hpp"
#include "zdv/complex_box.hpp"
#include "zdv/interval.hpp"

#include <stdexcept>
#include <vector>

namespace zdv {

namespace detail {

constexpr int stirling_terms = 9;  // uses B_2 .. B_18, remainder from B_20

// upper bound for sec(theta/2)^p over a box with Re > 0
inline interval sec_half_arg_pow(const cbox& w, int p) {
  interval tan_theta = interval(w.im.mag()) / interval(w.re.lo);
  interval theta_hi = atan(tan_theta);          // theta in [0, theta_hi]
  interval c = cos(interval(0.0, theta_hi.hi) * interval(0.5));
  if (c.lo <= 0) throw std::domain_error("sec bound: argument too close to the axis");
  return pown(interval(1.0) / interval(c.lo), p);
}

// Stirling evaluation, requires Re w >= 12
inline cbox stirling_lgamma(const cbox& w) {
  static const interval half_ln_2pi =
      interval::from_literal("0.9189385332046727417803297364056176398614");
  cbox lw = log(w).value();
  cbox res = (w - cbox(interval(0.5), interval(0.0))) * lw - w;
  res.re += half_ln_2pi;
  cbox winv = cbox(interval(1.0), interval(0.0)) / w;
  cbox winv2 = winv * winv;
  cbox pw = winv;  // w^{-(2j-1)}
  for (int j = 1; j <= stirling_terms; ++j) {
    interval coef = bernoulli_even(j) /
                    (interval::from_integer(2 * j) * interval::from_integer(2 * j - 1));
    res += pw * coef;
    pw = pw * winv2;
  }
  int J = stirling_terms;
  interval rem = abs(bernoulli_even(J + 1)) /
                 (interval::from_integer(2 * J + 2) * interval::from_integer(2 * J + 1));
  rem = rem * sec_half_arg_pow(w, 2 * J + 2) * pown(w.abs(), -(2 * J + 1));
  interval slack(-rem.hi, rem.hi);
  res.re += slack;
  res.im += slack;
  return res;
}

inline cbox stirling_digamma(const cbox& w) {
  cbox res = log(w).value();
  cbox winv = cbox(interval(1.0), interval(0.0)) / w;
  cbox winv2 = winv * winv;
  res -= winv * interval(0.5);
  cbox pw = winv2;  // w^{-2j}
  for (int j = 1; j <= stirling_terms; ++j) {
    interval coef = bernoulli_even(j) / interval::from_integer(2 * j);
    res -= pw * coef;
    pw = pw * winv2;
  }
  int J = stirling_terms;
  interval rem = abs(bernoulli_even(J + 1)) / interval::from_integer(2 * J + 2);
  rem = rem * interval(2.0) * sec_half_arg_pow(w, 2 * J + 4) * pown(w.abs(), -(2 * J + 2));
  interval slack(-rem.hi, rem.hi);
  res.re += slack;
  res.im += slack;
  return res;
}

} // namespace detail

// principal branch of log Gamma; requires Re z > 0
inline cbox lgamma_cbox(const cbox& z) {
  if (z.re.lo <= 0)
    throw std::domain_error("lgamma_cbox needs Re z > 0; reflect or shift first");
  long long m = 0;
  if (z.re.lo < 12.0) m = (long long)(12.0 - z.re.lo) + 1;
  cbox acc(interval(0.0), interval(0.0));
  for (long long j = 0; j < m; ++j)
    acc += log(z + cbox(interval::from_integer(j), interval(0.0))).value();
  cbox w = z + cbox(interval::from_integer(m), interval(0.0));
  return detail::stirling_lgamma(w) - acc;
}

inline cbox digamma_cbox(const cbox& z) {
  if (z.re.lo <= 0)
    throw std::domain_error("digamma_cbox needs Re z > 0");
  long long m = 0;
  if (z.re.lo < 12.0) m = (long long)(12.0 - z.re.lo) + 1;
  cbox acc(interval(0.0), interval(0.0));
  cbox one(interval(1.0), interval(0.0));
  for (long long j = 0; j < m; ++j)
    acc += one / (z + cbox(interval::from_integer(j), interval(0.0)));
  cbox w = z + cbox(interval::from_integer(m), interval(0.0));
  return detail::stirling_digamma(w) - acc;
}

// log Gamma restricted to the positive real axis
inline interval lgamma_interval(const interval& x) {
  return lgamma_cbox(cbox(x, interval(0.0))).re;
}

// double-precision mirror of lgamma_cbox for exploration scans; not rigorous.
// Branch may differ from the principal one by 2 pi i, so use only through exp.
inline std::complex<double> lgamma_approx(std::complex<double> z) {
  static const double coef[detail::stirling_terms] = {
      1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
      -691.0 / 360360, 1.0 / 156, -3617.0 / 122400, 43867.0 / 244188};
  std::complex<double> acc = 0.0;
  while (z.real() < 12.0) { acc += std::log(z); z += 1.0; }
  std::complex<double> res = (z - 0.5) * std::log(z) - z + 0.9189385332046727;
  std::complex<double> winv = 1.0 / z, winv2 = winv * winv, pw = winv;
  for (int j = 0; j < detail::stirling_terms; ++j) { res += pw * coef[j]; pw *= winv2; }
  return res - acc;
}

// log(n!) with a process-wide cache; single-threaded use assumed
inline const interval& log_factorial(long long n) {
  static std::vector<interval> cache{interval(0.0), interval(0.0)};  // 0!, 1!
  while ((long long)cache.size() <= n) {
    long long m = (long long)cache.size();
    cache.push_back(cache.back() + log(interval::from_integer(m)));
  }
  return cache[n];
}

} // namespace zdv

#endif
