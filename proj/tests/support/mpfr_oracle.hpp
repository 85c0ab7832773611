#ifndef ZDV_TESTS_MPFR_ORACLE_HPP
#define ZDV_TESTS_MPFR_ORACLE_HPP

// Test-only high-precision oracle (256-bit MPFR, round to nearest).
// Independent of the interval implementation under test.

#include <mpfr.h>

#include <string>

namespace oracle {

constexpr mpfr_prec_t kPrec = 256;

class real {
 public:
  real() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
  explicit real(double x) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, x, MPFR_RNDN); }
  explicit real(const char* s) { mpfr_init2(v_, kPrec); mpfr_set_str(v_, s, 10, MPFR_RNDN); }
  real(const real& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
  real& operator=(const real& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
  ~real() { mpfr_clear(v_); }

  double d() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend real operator+(const real& a, const real& b) { real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend real operator-(const real& a, const real& b) { real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend real operator*(const real& a, const real& b) { real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend real operator/(const real& a, const real& b) { real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }

  real exp() const { real r; mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
  real log() const { real r; mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
  real sqrt() const { real r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
  real sin() const { real r; mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
  real cos() const { real r; mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
  real abs() const { real r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
  real neg() const { real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

  int sign() const { return mpfr_sgn(v_); }
  double cmp_d(double x) const { return mpfr_cmp_d(v_, x); }

 private:
  mpfr_t v_;
};

} // namespace oracle

#endif
