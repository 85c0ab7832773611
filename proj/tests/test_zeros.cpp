#include "zdv/zeros.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

using namespace zdv;

namespace {

dirichlet_character zeta_char() { return character_set(1).all()[0]; }
dirichlet_character chi3() { return character_set(3).primitive()[0]; }
dirichlet_character chi4() { return character_set(4).primitive()[0]; }

// the character mod 5 sending 2 to i
dirichlet_character chi5_i() {
  for (const auto& c : character_set(5).primitive()) {
    std::complex<double> v = c.value(2).to_complex();
    if (std::abs(v - std::complex<double>(0.0, 1.0)) < 1e-9) return c;
  }
  FAIL("no character mod 5 with chi(2) = i");
  return character_set(5).primitive()[0];
}

void check_on_line_invariants(const std::vector<zero_record>& recs) {
  for (const auto& r : recs) {
    REQUIRE(r.on_critical_line);
    REQUIRE(r.beta.lo == 0.5);
    REQUIRE(r.beta.hi == 0.5);
    REQUIRE(r.method == localization_method::sign_change);
    REQUIRE(r.gamma.hi - r.gamma.lo < 1e-3);
  }
  for (size_t k = 1; k < recs.size(); ++k)
    REQUIRE(recs[k - 1].gamma.lo <= recs[k].gamma.lo);
}

bool list_contains(const std::vector<zero_record>& recs, double g) {
  for (const auto& r : recs)
    if (r.gamma.contains(g)) return true;
  return false;
}

bool window_contains(const count_window& w, long long n) {
  return w.main.lo - w.error_budget.hi <= double(n) &&
         double(n) <= w.main.hi + w.error_budget.hi;
}

} // namespace

TEST_CASE("zeta rectangle counts at small height") {
  rectangle_count r10 = count_zeros_rectangle(zeta_char(), 0.0, 10.0);
  REQUIRE(r10.count == 0);
  REQUIRE(r10.height == 10.0);
  REQUIRE(r10.normalized_residual().mag() < 0.01);

  rectangle_count r20 = count_zeros_rectangle(zeta_char(), 0.0, 20.0);
  REQUIRE(r20.count == 2);
  REQUIRE(r20.normalized_residual().mag() < 0.01);

  rectangle_count right = count_zeros_rectangle(zeta_char(), 0.975, 30.0);
  REQUIRE(right.count == 0);
}

TEST_CASE("zeta critical zeros to height 30") {
  std::vector<zero_record> recs = find_critical_zeros(zeta_char(), 30.0);
  REQUIRE(recs.size() == 6);
  check_on_line_invariants(recs);
  const double g1 = 14.13472514173469379045725;
  const double g2 = 21.02203963877155499262848;
  const double g3 = 25.01085758014568876321379;
  for (double g : {g1, g2, g3, -g1, -g2, -g3}) REQUIRE(list_contains(recs, g));

  REQUIRE(find_critical_zeros(zeta_char(), 10.0).empty());
}

TEST_CASE("chi mod 4 lowest zeros") {
  std::vector<zero_record> recs = find_critical_zeros(chi4(), 10.0);
  REQUIRE(recs.size() == 2);
  check_on_line_invariants(recs);
  REQUIRE(list_contains(recs, 6.02094890469759665));
  REQUIRE(list_contains(recs, -6.02094890469759665));
  REQUIRE(recs[0].gamma.lo == -recs[1].gamma.hi);
  REQUIRE(recs[0].gamma.hi == -recs[1].gamma.lo);
}

TEST_CASE("chi mod 3 zeros to height 25") {
  std::vector<zero_record> recs = find_critical_zeros(chi3(), 25.0);
  REQUIRE(recs.size() == 12);
  check_on_line_invariants(recs);
  const double gs[] = {8.03973715568146668,  11.2492062077729352, 15.7046191767216256,
                       18.2619974956931276, 20.4557708077424929, 24.0594148564934508};
  for (double g : gs) {
    REQUIRE(list_contains(recs, g));
    REQUIRE(list_contains(recs, -g));
  }
}

TEST_CASE("complex character mod 5 has asymmetric ordinates") {
  std::vector<zero_record> recs = find_critical_zeros(chi5_i(), 13.0);
  REQUIRE(recs.size() == 6);
  check_on_line_invariants(recs);
  for (double g : {-11.2828964415816, -9.44293112972851, -4.13290370521285,
                   6.18357819545085, 8.45722917442323, 12.6749464170114})
    REQUIRE(list_contains(recs, g));
}

TEST_CASE("batched scans share one modulus") {
  zero_scanner sc5(5);
  REQUIRE(sc5.characters().size() == 3);
  std::vector<zero_list> lists = sc5.critical_zeros(15.0);
  for (const auto& zl : lists) {
    REQUIRE(zl.complete_to == 15.0);
    check_on_line_invariants(zl.records);
  }
  // conjugate characters carry mirrored enclosures, bit for bit
  const auto& a = lists[sc5.position(1)].records;
  const auto& b = lists[sc5.position(3)].records;
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k) {
    REQUIRE(a[k].gamma.lo == -b[b.size() - 1 - k].gamma.hi);
    REQUIRE(a[k].gamma.hi == -b[b.size() - 1 - k].gamma.lo);
  }
  // the real quadratic character pairs its zeros
  REQUIRE(lists[sc5.position(2)].records.size() % 2 == 0);

  zero_scanner sc16(16);
  REQUIRE(sc16.characters().size() == 4);
  for (const auto& zl : sc16.critical_zeros(10.0)) {
    check_on_line_invariants(zl.records);
    REQUIRE(!zl.records.empty());
  }
}

TEST_CASE("count windows bracket the computed counts") {
  count_window wz = rvm_count_window(zeta_char(), 30.0);
  REQUIRE(std::abs(wz.main.mid() - 5.379312763) < 1e-8);
  REQUIRE(std::abs(wz.error_budget.mid() - 3.471252542) < 1e-8);
  REQUIRE(window_contains(wz, count_zeros_rectangle(zeta_char(), 0.0, 30.0).count));

  count_window w4 = rvm_count_window(chi4(), 50.0);
  REQUIRE(std::abs(w4.main.mid() - 39.15912359) < 1e-7);
  REQUIRE(std::abs(w4.error_budget.mid() - 5.936898575) < 1e-8);
  REQUIRE(window_contains(w4, count_zeros_rectangle(chi4(), 0.0, 50.0).count));

  count_window w3 = rvm_count_window(chi3(), 10.0);
  REQUIRE(window_contains(w3, count_zeros_rectangle(chi3(), 0.0, 10.0).count));

  // tiny height: the main term goes negative but the window still holds 0
  count_window wtiny = rvm_count_window(chi4(), 5.0 / 7.0);
  REQUIRE(wtiny.main.hi < 0.0);
  REQUIRE(window_contains(wtiny, 0));

  REQUIRE_THROWS_AS(rvm_count_window(zeta_char(), 14.0), std::domain_error);
  REQUIRE_THROWS_AS(rvm_count_window(chi4(), 0.7), std::domain_error);
}

TEST_CASE("disc counts from a certified list") {
  dirichlet_character z = zeta_char();
  zero_list zl{{1, 0}, 20.0, find_critical_zeros(z, 20.0)};
  REQUIRE(zl.records.size() == 2);
  cbox center(interval(1.0), interval(14.134725));

  REQUIRE(disc_count(z, 0.52, center, zl).count == 1);
  REQUIRE(disc_count(z, 1e-3, center, zl).count == 0);

  long long prev = 0;
  for (double r : {0.1, 0.3, 0.5, 0.52, 0.7, 1.0, 5.0}) {
    long long c = disc_count(z, r, center, zl).count;
    REQUIRE(c >= prev);
    prev = c;
  }

  // a radius running through the enclosure is counted in and flagged
  interval d = (center - cbox(zl.records[1].beta, zl.records[1].gamma)).abs();
  disc_count_result straddle = disc_count(z, d.mid(), center, zl);
  REQUIRE(straddle.count == 1);
  REQUIRE(straddle.boundary_flagged == 1);

  REQUIRE_THROWS_AS(disc_count(z, 0.2, cbox(interval(1.0), interval(19.9)), zl),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(disc_count(chi4(), 0.1, center, zl), std::invalid_argument);
}

TEST_CASE("zero records survive the json lines round trip") {
  std::vector<zero_record> recs = find_critical_zeros(chi4(), 10.0);
  std::stringstream ss;
  write_zero_records(ss, recs);
  std::vector<zero_record> back = read_zero_records(ss);
  REQUIRE(back.size() == recs.size());
  for (size_t k = 0; k < recs.size(); ++k) {
    REQUIRE(back[k].id == recs[k].id);
    REQUIRE(back[k].beta.lo == recs[k].beta.lo);
    REQUIRE(back[k].beta.hi == recs[k].beta.hi);
    REQUIRE(back[k].gamma.lo == recs[k].gamma.lo);
    REQUIRE(back[k].gamma.hi == recs[k].gamma.hi);
    REQUIRE(back[k].on_critical_line);
    REQUIRE(back[k].method == localization_method::sign_change);
  }
  std::stringstream bad(
      "{\"q\":1,\"char_index\":0,\"beta_lo\":0.5,\"beta_hi\":0.5,"
      "\"gamma_lo\":1.0,\"gamma_hi\":1.0,\"method\":\"guess\"}");
  REQUIRE_THROWS(read_zero_records(bad));
}

TEST_CASE("boundary zero forces a height perturbation") {
  rectangle_count r = count_zeros_rectangle(zeta_char(), 0.0, 14.1347251);
  REQUIRE(r.height != 14.1347251);
  REQUIRE(std::abs(r.height - 14.1347251) <= 1e-3);
  REQUIRE(r.count == 2);
}
