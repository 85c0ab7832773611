#include "zdv/interval.hpp"
#include "zdv/complex_box.hpp"

#include "support/mpfr_oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

using zdv::interval;
using zdv::cbox;

TEST_CASE("exact endpoint arithmetic stays exact") {
  interval a(1.0, 2.0), b(3.0, 4.0);
  interval s = a + b;
  CHECK(s.lo == 4.0);
  CHECK(s.hi == 6.0);

  interval z(0.0, 0.0);
  interval p = interval(-1.0, 1.0) * z;
  CHECK(p.lo == 0.0);
  CHECK(p.hi == 0.0);

  interval q = zdv::sqrt(interval(4.0, 9.0));
  CHECK(q.lo == 2.0);
  CHECK(q.hi == 3.0);

  interval m = interval(-1.0, 1.0) * interval(2.0, 3.0);
  CHECK(m.lo == -3.0);
  CHECK(m.hi == 3.0);
}

TEST_CASE("division by interval containing zero raises") {
  CHECK_THROWS_AS(interval(1.0) / interval(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(zdv::log(interval(-1.0, 1.0)), std::domain_error);
  CHECK_THROWS_AS(zdv::sqrt(interval(-2.0, -1.0)), std::domain_error);
  CHECK_THROWS_AS(interval(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("constant enclosures are tight and correct") {
  auto pi = zdv::consts::pi<double>();
  CHECK(pi.contains(3.14159265358979323846));
  CHECK(pi.width() < 1e-15);
  auto g = zdv::consts::euler_gamma<double>();
  CHECK(g.contains(0.5772156649015328606));
  CHECK(g.width() < 1e-15);
  // from_literal round trips through correctly rounded strtod
  auto x = interval::from_literal("0.1");
  CHECK(x.contains(0.1));
  CHECK(x.width() <= 3e-17);
}

TEST_CASE("integer conversion widens only when inexact") {
  auto small = interval::from_integer(1234567);
  CHECK(small.lo == 1234567.0);
  CHECK(small.hi == 1234567.0);
  long long big = (1LL << 60) + 1;
  auto wide = interval::from_integer(big);
  CHECK(wide.lo < wide.hi);
  CHECK(wide.lo <= static_cast<double>(big));
}

namespace {

// random composed expressions: interval evaluation must contain the
// 256-bit MPFR evaluation of the same expression at point inputs
struct both {
  interval iv;
  oracle::real hp;
};

both apply(int op, const both& a, const both& b) {
  switch (op) {
    case 0: return {a.iv + b.iv, a.hp + b.hp};
    case 1: return {a.iv - b.iv, a.hp - b.hp};
    case 2: return {a.iv * b.iv, a.hp * b.hp};
    case 3: {
      interval shifted = zdv::abs(b.iv) + interval(0.5);
      return {a.iv / shifted, a.hp / (b.hp.abs() + oracle::real(0.5))};
    }
    case 4: {
      interval scaled = a.iv * interval(0.125);
      return {zdv::exp(scaled), (a.hp * oracle::real(0.125)).exp()};
    }
    case 5: {
      interval shifted = zdv::abs(a.iv) + interval(0.25);
      return {zdv::log(shifted), (a.hp.abs() + oracle::real(0.25)).log()};
    }
    case 6: return {zdv::sqrt(zdv::abs(a.iv)), a.hp.abs().sqrt()};
    case 7: return {zdv::sin(a.iv), a.hp.sin()};
    default: return {zdv::cos(a.iv), a.hp.cos()};
  }
}

} // namespace

TEST_CASE("composed expressions contain the high precision value") {
  std::mt19937_64 rng(20260815);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * std::ldexp(static_cast<double>(rng() >> 11), -53);
  };
  const int kRounds = 12500, kOpsPerRound = 8;  // 1e5 checked operations
  for (int r = 0; r < kRounds; ++r) {
    double x = uniform(-10.0, 10.0), y = uniform(-10.0, 10.0);
    both a{interval(x), oracle::real(x)};
    both b{interval(y), oracle::real(y)};
    for (int i = 0; i < kOpsPerRound; ++i) {
      int op = static_cast<int>(rng() % 9);
      both c = apply(op, a, b);
      REQUIRE(c.iv.lo <= c.iv.hi);
      // containment at 256 bits: compare against directed endpoints
      REQUIRE(c.hp.cmp_d(c.iv.lo) >= 0);
      REQUIRE(c.hp.cmp_d(c.iv.hi) <= 0);
      b = a;
      a = c;
      if (a.iv.mag() > 50.0) {  // keep the walk inside exp's range
        double fresh = uniform(-10.0, 10.0);
        a = {interval(fresh), oracle::real(fresh)};
      }
    }
  }
}

TEST_CASE("widening inputs never shrinks outputs") {
  std::mt19937_64 rng(99);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * std::ldexp(static_cast<double>(rng() >> 11), -53);
  };
  for (int r = 0; r < 20000; ++r) {
    double x = uniform(-5.0, 5.0), w = uniform(0.0, 0.5);
    interval a(x, x + w);
    interval wide(a.lo - uniform(0.0, 0.25), a.hi + uniform(0.0, 0.25));
    interval b(uniform(0.5, 3.0), uniform(3.0, 6.0));

    CHECK(((wide + b)).contains(a + b));
    CHECK(((wide - b)).contains(a - b));
    CHECK(((wide * b)).contains(a * b));
    CHECK(((wide / b)).contains(a / b));
    CHECK(zdv::exp(wide * interval(0.2)).contains(zdv::exp(a * interval(0.2))));
    CHECK(zdv::sin(wide).contains(zdv::sin(a)));
    CHECK(zdv::cos(wide).contains(zdv::cos(a)));
    CHECK(zdv::sqrt(zdv::abs(wide) + interval(0.1)).contains(zdv::sqrt(zdv::abs(a) + interval(0.1))));
  }
}

TEST_CASE("trigonometric enclosures honor interior extrema") {
  interval c = zdv::cos(interval(0.0, 3.2));
  CHECK(c.lo == -1.0);
  CHECK(c.hi == 1.0);
  interval c2 = zdv::cos(interval(6.2, 6.4));  // crosses 2*pi
  CHECK(c2.hi == 1.0);
  CHECK(c2.lo < 1.0);
  interval s = zdv::sin(zdv::consts::pi<double>());
  CHECK(s.contains(0.0));
  CHECK(s.width() < 1e-14);
  interval whole = zdv::sin(interval(0.0, 100.0));
  CHECK(whole.lo == -1.0);
  CHECK(whole.hi == 1.0);
}

TEST_CASE("pown and pow agree and stay rigorous") {
  interval x(1.5, 1.5000001);
  interval a = zdv::pown(x, 7);
  interval b = zdv::pow(x, interval(7.0));
  CHECK(a.intersects(b));
  CHECK(a.contains(17.0859375));  // 1.5^7
  interval even = zdv::pown(interval(-2.0, 1.0), 2);
  CHECK(even.lo == 0.0);
  CHECK(even.contains(4.0));
  interval inv = zdv::pown(interval(2.0, 2.0), -2);
  CHECK(inv.contains(0.25));
}

TEST_CASE("complex box arithmetic contains point arithmetic") {
  std::mt19937_64 rng(7);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * std::ldexp(static_cast<double>(rng() >> 11), -53);
  };
  for (int r = 0; r < 5000; ++r) {
    std::complex<double> z(uniform(-3, 3), uniform(-3, 3));
    std::complex<double> w(uniform(-3, 3), uniform(-3, 3));
    cbox Z(z), W(w);
    CHECK((Z * W).contains(z * w));
    CHECK((Z + W).contains(z + w));
    CHECK((Z - W).contains(z - w));
    CHECK(zdv::exp(Z).widened(8).contains(std::exp(z)));
    {
      std::complex<long double> zl(z.real(), z.imag()), p5(1, 0);
      for (int k = 0; k < 5; ++k) p5 *= zl;
      std::complex<double> p5d(static_cast<double>(p5.real()), static_cast<double>(p5.imag()));
      CHECK(zdv::pown(Z, 5).widened(4).contains(p5d));
    }
    if (std::abs(w) > 0.1) {
      // reference quotient in extended precision: libm complex division
      // is not correctly rounded, so compare against the exact formula
      long double zr = z.real(), zi = z.imag(), wr = w.real(), wi = w.imag();
      long double n = wr * wr + wi * wi;
      std::complex<double> qref(static_cast<double>((zr * wr + zi * wi) / n),
                                static_cast<double>((zi * wr - zr * wi) / n));
      CHECK((Z / W).widened(8).contains(qref));
    }
  }
}

TEST_CASE("complex box abs and arg") {
  cbox z(interval(3.0, 3.1), interval(4.0, 4.1));
  interval a = z.abs();
  CHECK(a.contains(5.0));
  CHECK(a.hi < 5.15);
  auto ar = z.arg();
  REQUIRE(ar.has_value());
  CHECK(ar->contains(std::atan2(4.05, 3.05)));

  cbox cut(interval(-2.0, -1.0), interval(-0.1, 0.1));
  CHECK_FALSE(cut.arg().has_value());
  cbox origin(interval(-0.1, 0.1), interval(-0.1, 0.1));
  CHECK_FALSE(origin.arg().has_value());
  CHECK_THROWS_AS(cbox(interval(1.0), interval(0.0)) / origin, std::domain_error);
}
