#include <catch2/catch_amalgamated.hpp>

#include "zdv/sieve.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <stdexcept>

using namespace zdv;

namespace {

bool contains_value(const interval& x, const char* digits, double rel = 1e-10) {
  interval v = interval::from_literal(digits);
  double scale = std::max(1.0, std::abs(v.mid()));
  return x.intersects(v) && x.width() <= rel * scale;
}

using coeff_list = std::vector<std::pair<long long, std::complex<double>>>;

coeff_list ones(std::initializer_list<long long> ns) {
  coeff_list c;
  for (long long n : ns) c.emplace_back(n, 1.0);
  return c;
}

// plain-double adaptive Simpson for the quadrature cross-check
double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double whole, double tol,
               int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, tol, 28);
}

} // namespace

TEST_CASE("construction enforces the sifted support", "[sieve]") {
  REQUIRE_NOTHROW(make_sieve_instance(3, 0, 20, 0.0, ones({5, 7, 11, 13, 17, 19})));
  REQUIRE_NOTHROW(make_sieve_instance(3, 0, 20, 0.0, ones({1})));  // no factors
  REQUIRE_THROWS_AS(make_sieve_instance(3, 0, 20, 0.0, ones({6})),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_sieve_instance(3, 0, 20, 0.0, ones({2})),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_sieve_instance(3, 0, 20, 0.0, ones({21})),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_sieve_instance(3, 5, 20, 0.0, ones({5})),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_sieve_instance(3, 0, 20, 0.0, ones({7, 7})),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_sieve_instance(0, 0, 20, 0.0, ones({7})),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(make_sieve_instance(3, 0, 0, 0.0, {}), std::invalid_argument);

  sieve_instance ind = sifted_indicator(3, 0, 20);
  REQUIRE(ind.coefficients.size() == 7);  // 1, 5, 7, 11, 13, 17, 19
}

TEST_CASE("pre-sifted large sieve at reference points", "[sieve]") {
  sieve_instance primes6 =
      make_sieve_instance(3, 0, 20, 0.0, ones({5, 7, 11, 13, 17, 19}));
  bound_certificate c = large_sieve_check(primes6);
  REQUIRE(c.verdict == verdict_t::holds);
  REQUIRE(c.observed.has_value());
  REQUIRE(contains_value(c.observed->log10_abs(), "1.597146953336207903361578"));
  REQUIRE(contains_value(c.bound.log10_abs(), "2.225309281725862853648461"));

  // single modulus: the only weight is log(1/1) = 0
  bound_certificate z = large_sieve_check(sifted_indicator(1, 0, 5));
  REQUIRE(z.verdict == verdict_t::holds);
  REQUIRE(z.observed.has_value());
  REQUIRE(z.observed->sign == 0);

  sieve_instance too_wide = make_sieve_instance(2, 0, 501, 0.0, ones({3}));
  REQUIRE_THROWS_AS(large_sieve_check(too_wide), std::invalid_argument);
}

TEST_CASE("integrated form at reference points", "[sieve]") {
  sieve_instance four =
      make_sieve_instance(3, 0, 13, 10.0, ones({5, 7, 11, 13}));
  bound_certificate c = integrated_sieve_check(four);
  REQUIRE(c.verdict == verdict_t::holds);
  REQUIRE(c.observed.has_value());
  REQUIRE(contains_value(c.observed->log10_abs(), "2.025085442552054366064990"));
  REQUIRE(contains_value(c.bound.log10_abs(), "3.442793225939769136479950"));

  // one supported point: diagonal term only
  sieve_instance single =
      make_sieve_instance(3, 0, 7, 5.0, {{7, {2.0, 1.0}}});
  bound_certificate d = integrated_sieve_check(single);
  REQUIRE(d.verdict == verdict_t::holds);
  REQUIRE(contains_value(d.observed->log10_abs(), "1.739814456904939443130306"));
  REQUIRE(contains_value(d.bound.log10_abs(), "3.260071387985074795132460"));

  sieve_instance deep = make_sieve_instance(3, 0, 7, 25.0, ones({5}));
  REQUIRE_THROWS_AS(integrated_sieve_check(deep), std::invalid_argument);
}

TEST_CASE("closed-form integral matches quadrature", "[sieve][slow]") {
  std::vector<dirichlet_character> pool;
  for (long long q : {1LL, 3LL, 4LL, 5LL})
    for (const dirichlet_character& chi : enumerate_primitive(q))
      pool.push_back(chi);

  std::mt19937_64 rng(424242);
  for (int iter = 0; iter < 50; ++iter) {
    sieve_instance inst = random_sieve_instance(rng, 3, 40, 8.0);
    const dirichlet_character& chi = pool[rng() % pool.size()];
    interval closed = integrated_character_integral(chi, inst.coefficients, inst.T);

    auto f = [&](double t) {
      std::complex<double> s = 0.0;
      for (const auto& [n, a] : inst.coefficients) {
        double ln = std::log(static_cast<double>(n));
        s += a * chi.value(n).to_complex() *
             std::complex<double>(std::cos(t * ln), -std::sin(t * ln));
      }
      return std::norm(s);
    };
    double quad = integrate(f, -inst.T, inst.T, 1e-10);
    INFO("iter " << iter << " q=" << chi.q << " T=" << inst.T << " closed=["
                 << closed.lo << ", " << closed.hi << "] quad=" << quad);
    REQUIRE(quad >= closed.lo - 1e-5);
    REQUIRE(quad <= closed.hi + 1e-5);
  }
}

TEST_CASE("prime-sum windows", "[sieve][slow]") {
  REQUIRE(contains_value(prime_log_sum(100.0), "3.369470874998981902", 1e-8));
  REQUIRE(contains_value(prime_log2_sum(1e3, 1e6), "71.277096935459979932", 1e-8));

  bound_certificate small = mertens_bounds(100.0, 1000.0);
  REQUIRE(small.verdict == verdict_t::holds);

  bound_certificate mid = mertens_bounds(1e3, 1e6);
  REQUIRE(mid.verdict == verdict_t::holds);
  REQUIRE(contains_value(mid.observed->log10_abs(), "1.852950002889292290846042"));
  REQUIRE(contains_value(mid.bound.log10_abs(), "1.996540765439933065036161"));

  // empty second sum at x = y; the window check still runs
  REQUIRE(mertens_bounds(50.0, 50.0).verdict == verdict_t::holds);

  REQUIRE(prime_log_sum(1e3).hi < prime_log_sum(1e4).lo);

  interval big = prime_log_sum(1e7);
  REQUIRE(contains_value(big, "14.785700405801071255", 1e-8));
  REQUIRE(big.width() / big.lo < 1e-8);
  REQUIRE(mertens_bounds(1e7, 1e7).verdict == verdict_t::holds);

  REQUIRE_THROWS_AS(prime_log_sum(1.5), std::invalid_argument);
  REQUIRE_THROWS_AS(mertens_bounds(3.0, 2.0), std::invalid_argument);
  REQUIRE_THROWS_AS(mertens_bounds(2.0, 2e7), std::invalid_argument);
}

TEST_CASE("random instances never violate either inequality", "[sieve][slow]") {
  sieve_sweep_summary plain = sieve_sweep(1000, 0x51e7e001ULL, false);
  REQUIRE(plain.instances == 1000);
  REQUIRE(plain.violations == 0);
  REQUIRE(plain.unresolved == 0);

  sieve_sweep_summary integ = sieve_sweep(200, 0x51e7e002ULL, true);
  REQUIRE(integ.instances == 200);
  REQUIRE(integ.violations == 0);
  REQUIRE(integ.unresolved == 0);
}
