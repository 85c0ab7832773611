#include <catch2/catch_amalgamated.hpp>

#include "zdv/sarkozy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace zdv;

namespace {

bool contains_value(const interval& x, const char* digits, double rel = 1e-12) {
  interval v = interval::from_literal(digits);
  double scale = std::max(std::abs(v.mid()), 1e-300);
  return x.intersects(v) && x.width() <= rel * scale;
}

} // namespace

TEST_CASE("application constants are reproduced", "[sarkozy]") {
  sarkozy_constants sc = make_sarkozy_constants();
  REQUIRE(sc.lambda1 == rat(1, 20LL));
  REQUIRE(sc.lambda3 == 198);
  REQUIRE(sc.B == 323905);
  REQUIRE(sc.c.str() == "9/100000000000000");
  REQUIRE(sc.tau0 == sc.c);
  REQUIRE(contains_value(sc.c.enclosure(), "9e-14"));

  // log10(10^103) and log10(7 * 3^6 * 2^22993)
  REQUIRE(sc.lambda2.sign == 1);
  REQUIRE(contains_value(sc.lambda2.log10_abs(), "103"));
  REQUIRE(contains_value(sc.M_log10, "6925.290515870251853003981"));

  // 1/(4M) in log10, the far end of the magnitude chain
  interval inv4M_log10 =
      -(sc.M_log10 + log(interval(4.0)) / consts::ln10<double>());
  REQUIRE(contains_value(inv4M_log10, "-6925.892575861579815394408"));
}

TEST_CASE("the B-step inequality certifies on the whole window", "[sarkozy]") {
  bound_certificate cert = verify_B_inequality();
  REQUIRE(cert.name == "prop:ZDE_application.B");
  REQUIRE(cert.verdict == verdict_t::holds);
  REQUIRE(cert.observed.has_value());
  REQUIRE(cert.observed->sign == 1);
  REQUIRE(cert.observed->log10_abs().hi < 0.0);  // certified sup strictly below 1

  double cutoff = 0;
  for (const auto& kv : cert.inputs)
    if (kv.first == "taylor_cutoff") cutoff = kv.second;
  REQUIRE(cutoff == Catch::Approx(6.174640442953992e-6).epsilon(1e-12));

  // uniform cross-check scan: every box certifies on its first evaluation,
  // and the certified sup creeps up to just below 1 near the left edge
  bound_certificate uni = verify_B_inequality(1000);
  REQUIRE(uni.verdict == verdict_t::holds);
  REQUIRE(uni.notes.find("uniform scan needed 0 splits") != std::string::npos);
  REQUIRE(uni.observed->log10_abs().hi < 0.0);
  REQUIRE(uni.observed->log10_abs().lo > -2e-4);
}

TEST_CASE("the magnitude chain lands under 1.24e-6926", "[sarkozy]") {
  chain_result r = zde_application_chain(1e6);
  REQUIRE(r.certificate.name == "prop:ZDE_application");
  REQUIRE(r.certificate.verdict == verdict_t::holds);
  REQUIRE(r.value.sign == 1);
  REQUIRE(contains_value(r.value.log10_abs(), "-6925.907029876234647390152"));

  // margin to the stated 1.24e-6926, in log10
  interval margin = r.certificate.bound.log10_abs() - r.value.log10_abs();
  REQUIRE(margin.lo > 0.00044);
  REQUIRE(margin.hi < 0.00046);

  // the subtracted Q-power is invisible at this scale: Q = 10 gives the
  // same magnitude to every digit we freeze
  chain_result low = zde_application_chain(10.0);
  REQUIRE(low.certificate.verdict == verdict_t::holds);
  REQUIRE(contains_value(low.value.log10_abs(), "-6925.907029876234647390152"));
  REQUIRE(logmag::compare(low.value, r.certificate.bound) == -1);

  chain_result big = zde_application_chain(1e299);
  REQUIRE(big.certificate.verdict == verdict_t::holds);

  REQUIRE_THROWS_AS(zde_application_chain(9.99), std::invalid_argument);
  REQUIRE_THROWS_AS(zde_application_chain(1e300), std::invalid_argument);

  // second link, 1.28e-6926 <= 1/(4M), pinned numerically: margin in log10
  sarkozy_constants sc = make_sarkozy_constants();
  interval inv4M_log10 =
      -(sc.M_log10 + log(interval(4.0)) / consts::ln10<double>());
  interval b128_log10 =
      log(interval::ratio(128, 100)) / consts::ln10<double>() - interval::from_integer(6926);
  interval margin2 = inv4M_log10 - b128_log10;
  REQUIRE(margin2.lo > 0.000213);
  REQUIRE(margin2.hi < 0.000215);
}

TEST_CASE("c sits under the admissibility bound and kappa is exact", "[sarkozy]") {
  c_kappa_result ck = compute_c_and_kappa();
  REQUIRE(ck.certificate.name == "prop:pre-Sarkozy");
  REQUIRE(ck.certificate.verdict == verdict_t::holds);

  REQUIRE(contains_value(ck.c_max, "9.797800363506433832036119e-14"));
  REQUIRE(ck.c_max.lo > 9e-14);  // 9e-14 is strictly admissible
  REQUIRE(ck.certificate.notes.find("1e-6 lambda1/(32 ln 4M)") != std::string::npos);

  REQUIRE(ck.kappa_gap == rat(132, 1LL) * rat::pow10(-20));
  REQUIRE(ck.kappa_gap.str() == "33/25000000000000000000");
  REQUIRE(contains_value(ck.kappa_gap.enclosure(), "1.32e-18"));
}

TEST_CASE("avoiding-set searches agree and validate", "[sarkozy]") {
  REQUIRE(forbidden_differences(40) ==
          std::vector<long long>{1, 2, 4, 6, 10, 12, 16, 18, 22, 28, 30, 36});

  avoiding_set s3 = sarkozy_search(3, search_method::exhaustive);
  REQUIRE(s3.elements == std::vector<long long>{1});
  avoiding_set s4 = sarkozy_search(4, search_method::exhaustive);
  REQUIRE(s4.elements == std::vector<long long>{1, 4});

  avoiding_set s10 = sarkozy_search(10, search_method::exhaustive);
  REQUIRE(s10.elements == std::vector<long long>{1, 4, 9});
  avoiding_set s40 = sarkozy_search(40, search_method::exhaustive);
  REQUIRE(s40.elements == std::vector<long long>{1, 4, 9, 12, 33, 36});

  // both maximum searches return the lexicographically smallest witness,
  // so they must agree exactly on the shared range
  for (long long N = 1; N <= 40; ++N) {
    avoiding_set ex = sarkozy_search(N, search_method::exhaustive);
    avoiding_set bb = sarkozy_search(N, search_method::dp);
    REQUIRE(ex.elements == bb.elements);
    REQUIRE(bb.method == search_method::dp);
  }

  avoiding_set s100 = sarkozy_search(100, search_method::dp);
  REQUIRE(s100.elements ==
          std::vector<long long>{1, 4, 9, 12, 33, 36, 57, 60, 65, 68});

  avoiding_set s200 = sarkozy_search(200, search_method::dp);
  REQUIRE(s200.elements.size() >= 10);
  REQUIRE(recheck_avoiding(s200));

  avoiding_set g1000 = sarkozy_search(1000, search_method::greedy);
  REQUIRE(g1000.elements.size() == 28);
  REQUIRE(std::vector<long long>(g1000.elements.begin(), g1000.elements.begin() + 12) ==
          std::vector<long long>{1, 4, 9, 12, 33, 36, 57, 60, 65, 68, 119, 122});

  // greedy decisions at n depend only on primes up to n, so results are
  // prefix-consistent across different N
  avoiding_set g1e5 = sarkozy_search(100000, search_method::greedy);
  REQUIRE(g1e5.elements.size() == 92);
  REQUIRE(recheck_avoiding(g1e5));
  std::vector<long long> head;
  for (long long v : g1e5.elements)
    if (v <= 1000) head.push_back(v);
  REQUIRE(head == g1000.elements);

  REQUIRE_THROWS_AS(sarkozy_search(41, search_method::exhaustive), std::invalid_argument);
  REQUIRE_THROWS_AS(sarkozy_search(201, search_method::dp), std::invalid_argument);
  REQUIRE_THROWS_AS(sarkozy_search(1000001, search_method::greedy), std::invalid_argument);
  REQUIRE_THROWS_AS(sarkozy_search(0, search_method::greedy), std::invalid_argument);

  // the independent recheck rejects bad sets of every flavor
  avoiding_set bad;
  bad.N = 10;
  bad.elements = {1, 2};  // difference 1, from p = 2
  REQUIRE_FALSE(recheck_avoiding(bad));
  bad.elements = {4, 1};  // unsorted
  REQUIRE_FALSE(recheck_avoiding(bad));
  bad.elements = {1, 11};  // out of range
  REQUIRE_FALSE(recheck_avoiding(bad));
  bad.elements = {1, 4, 9};
  REQUIRE(recheck_avoiding(bad));
}

TEST_CASE("exhaustive densities drift down but the ladder flags N = 40", "[sarkozy]") {
  density_report rep = exhaustive_density_scan();
  REQUIRE(rep.points.size() == 4);
  std::vector<long long> sizes;
  for (const density_point& p : rep.points) sizes.push_back(p.size);
  REQUIRE(sizes == std::vector<long long>{3, 4, 4, 6});

  // 6/40 = 0.15 > 4/30, so the scan is flagged for review rather than failed
  REQUIRE_FALSE(rep.nonincreasing);
  for (const density_point& p : rep.points)
    WARN("density ladder N=" << p.N << " size=" << p.size << " density=" << p.density);

  density_report short_rep = exhaustive_density_scan({10, 20, 30});
  REQUIRE(short_rep.nonincreasing);
}
