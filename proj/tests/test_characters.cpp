#include "zdv/characters.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <map>

using namespace zdv;

namespace {

long long phi_ref(long long n) {
  long long r = n;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) { r -= r / p; while (n % p == 0) n /= p; }
  if (n > 1) r -= r / n;
  return r;
}

int mobius_ref(long long n) {
  int m = 1;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  if (n > 1) m = -m;
  return m;
}

long long primitive_count_ref(long long q) {
  // sum over d | q of mu(q/d) phi(d)
  long long s = 0;
  for (long long d = 1; d <= q; ++d)
    if (q % d == 0) s += mobius_ref(q / d) * phi_ref(d);
  return s;
}

} // namespace

TEST_CASE("character counts match phi and the primitive-count table") {
  const long long expect_prim[21] = {0, 1, 0, 1, 1, 3, 0, 5, 2, 4, 0,
                                     9, 1, 11, 0, 3, 4, 15, 0, 17, 3};
  long long prim_to_50 = 0, prim_to_100 = 0, phi_to_100 = 0;
  for (long long q = 1; q <= 100; ++q) {
    character_set cs(q);
    REQUIRE((long long)cs.all().size() == phi_ref(q));
    long long np = (long long)cs.primitive().size();
    if (q <= 20) REQUIRE(np == expect_prim[q]);
    if (q <= 50) prim_to_50 += np;
    prim_to_100 += np;
    phi_to_100 += (long long)cs.all().size();
  }
  REQUIRE(prim_to_50 == 471);
  REQUIRE(prim_to_100 == 1816);
  REQUIRE(phi_to_100 == 3044);
}

TEST_CASE("primitive counts agree with the Mobius convolution up to 1000") {
  for (long long q = 1; q <= 1000; ++q) {
    character_set cs(q);
    REQUIRE((long long)cs.primitive().size() == primitive_count_ref(q));
  }
}

TEST_CASE("enumeration is canonical and indices are ranks") {
  for (long long q : {1, 4, 8, 12, 45, 100}) {
    character_set cs(q);
    long long idx = 0;
    for (const auto& chi : cs.all()) {
      REQUIRE(chi.index == idx++);
      dirichlet_character copy = chi;
      copy.recompute_index();
      REQUIRE(copy.index == chi.index);
    }
  }
  REQUIRE(enumerate_primitive(1).size() == 1);
  REQUIRE(enumerate_primitive(1)[0].is_trivial());
  REQUIRE(enumerate_primitive(2).empty());
  REQUIRE(enumerate_primitive(6).empty());
}

TEST_CASE("values are multiplicative exact roots of unity") {
  for (long long q : {3, 4, 5, 8, 9, 12, 16, 21, 40, 72}) {
    character_set cs(q);
    for (const auto& chi : cs.all()) {
      for (long long m = 0; m < q; ++m) {
        for (long long n = m; n < q; n += 3) {
          root_of_unity a = chi.value(m), b = chi.value(n);
          root_of_unity ab = chi.value(m * n);
          if (a.zero || b.zero) {
            REQUIRE(ab.zero);
            continue;
          }
          root_of_unity prod;
          prod.den = std::lcm(a.den, b.den);
          prod.num = a.num * (prod.den / a.den) + b.num * (prod.den / b.den);
          prod = prod.reduced();
          REQUIRE(ab.num == prod.num);
          REQUIRE(ab.den == prod.den);
        }
      }
    }
  }
}

TEST_CASE("parity, order, reality") {
  character_set c4(4);
  const auto& chi4 = c4.all()[1];
  REQUIRE(chi4.primitive);
  REQUIRE(chi4.parity == 1);
  REQUIRE(chi4.order == 2);
  REQUIRE(chi4.is_real());

  character_set c3(3);
  REQUIRE(c3.all()[1].parity == 1);
  REQUIRE(c3.all()[1].order == 2);

  character_set c5(5);
  const auto& chi5 = c5.all()[1];  // 2 -> i
  root_of_unity v = chi5.value(2);
  REQUIRE(v.num == 1);
  REQUIRE(v.den == 4);
  REQUIRE(chi5.order == 4);
  REQUIRE(chi5.parity == 1);
  REQUIRE_FALSE(chi5.is_real());
  const auto& quad5 = c5.all()[2];  // quadratic, even since 5 = 1 mod 4
  REQUIRE(quad5.order == 2);
  REQUIRE(quad5.parity == 0);

  // chi(-1) = (-1)^parity for every character mod q <= 60
  for (long long q = 1; q <= 60; ++q) {
    character_set cs(q);
    for (const auto& chi : cs.all()) {
      root_of_unity v1 = chi.value(q - 1);  // -1 mod q
      if (q <= 2) { REQUIRE(chi.parity == 0); continue; }
      REQUIRE(v1.den == (chi.parity ? 2 : 1));
      REQUIRE(cs.group().lambda % chi.order == 0);
    }
  }
}

TEST_CASE("conjugation negates exponents and values") {
  for (long long q : {5, 7, 16, 35}) {
    character_set cs(q);
    for (const auto& chi : cs.all()) {
      dirichlet_character bar = chi.conjugate();
      REQUIRE(bar.q == q);
      for (long long n = 0; n < q; ++n) {
        root_of_unity a = chi.value(n), b = bar.value(n);
        REQUIRE(a.zero == b.zero);
        if (a.zero) continue;
        long long den = std::lcm(a.den, b.den);
        long long s = (a.num * (den / a.den) + b.num * (den / b.den)) % den;
        REQUIRE(s == 0);  // bar value is the inverse root
      }
    }
  }
}

TEST_CASE("orthogonality holds exhaustively for q <= 100") {
  for (long long q = 1; q <= 100; ++q) {
    character_set cs(q);
    const auto& chars = cs.all();
    const long long phi = (long long)chars.size();
    // cache value boxes per character
    std::vector<std::vector<cbox>> table(chars.size());
    for (size_t i = 0; i < chars.size(); ++i) {
      table[i].reserve(q);
      for (long long n = 0; n < q; ++n)
        table[i].push_back(chars[i].value(n).to_cbox());
    }
    for (size_t i = 0; i < chars.size(); ++i) {
      for (size_t j = i; j < chars.size(); ++j) {
        cbox s(interval(0.0), interval(0.0));
        for (long long n = 0; n < q; ++n)
          s += table[i][n] * table[j][n].conj();
        double expect = (i == j) ? double(phi) : 0.0;
        REQUIRE(s.re.contains(expect));
        REQUIRE(s.im.contains(0.0));
        REQUIRE(s.max_width() < 1e-9);
      }
    }
  }
}

TEST_CASE("gauss sums: exact 2i at modulus four, modulus sqrt(q) in general") {
  character_set c4(4);
  cbox tau4 = gauss_sum(c4.all()[1]);
  REQUIRE(tau4.re.lo == 0.0);
  REQUIRE(tau4.re.hi == 0.0);
  REQUIRE(tau4.im.lo == 2.0);
  REQUIRE(tau4.im.hi == 2.0);

  character_set c5(5);
  cbox tau5 = gauss_sum(c5.all()[1]);
  REQUIRE(tau5.re.contains(-1.1755705045849462583));
  REQUIRE(tau5.im.contains(1.9021130325903071442));
  REQUIRE(tau5.max_width() < 1e-12);

  for (long long q = 3; q <= 30; ++q) {
    for (const auto& chi : enumerate_primitive(q)) {
      interval n2 = gauss_sum(chi).norm();
      REQUIRE(n2.contains(double(q)));
      REQUIRE(n2.width() < 1e-9);
    }
  }
}
