#ifndef ZDV_CHARACTERS_HPP
#define ZDV_CHARACTERS_HPP

// Dirichlet characters mod q via generator decomposition of (Z/q)^*.
//
// Components are ordered by ascending prime power; the 2-power part (e >= 3)
// contributes the <-1> component before the <5> component.  A character is
// the exponent tuple (k_i) against those generators, enumerated in mixed
// radix lexicographic order; `index` is that rank among all characters mod q.
// Character values are exact roots of unity (rational exponent num/den) and
// only become intervals at the last moment; denominators dividing 4 stay
// exact even as boxes.

#include "zdv/complex_box.hpp"
#include "zdv/interval.hpp"

#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace zdv {

struct root_of_unity {
  long long num = 0, den = 1;  // value = e(num/den), 0 <= num < den
  bool zero = false;           // chi(n) = 0 when gcd(n, q) > 1

  static root_of_unity null() { root_of_unity r; r.zero = true; return r; }

  root_of_unity reduced() const {
    if (zero) return *this;
    root_of_unity r;
    r.den = den;
    r.num = ((num % den) + den) % den;
    long long g = std::gcd(r.num, r.den);
    if (g > 1) { r.num /= g; r.den /= g; }
    return r;
  }

  cbox to_cbox() const {
    if (zero) return cbox(interval(0.0), interval(0.0));
    root_of_unity r = reduced();
    if (r.den == 1) return cbox(interval(1.0), interval(0.0));
    if (r.den == 2) return cbox(interval(-1.0), interval(0.0));
    if (r.den == 4)
      return r.num == 1 ? cbox(interval(0.0), interval(1.0))
                        : cbox(interval(0.0), interval(-1.0));
    interval theta = interval(2.0) * consts::pi<double>() *
                     interval::ratio(r.num, r.den);
    return cbox(cos(theta), sin(theta));
  }

  std::complex<double> to_complex() const {
    if (zero) return {0.0, 0.0};
    root_of_unity r = reduced();
    double th = 2.0 * 3.141592653589793238462643 * double(r.num) / double(r.den);
    if (r.den == 1) return {1, 0};
    if (r.den == 2) return {-1, 0};
    if (r.den == 4) return {0.0, r.num == 1 ? 1.0 : -1.0};
    return {std::cos(th), std::sin(th)};
  }
};

namespace detail {

inline long long pow_mod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = (__int128)r * b % m;
    b = (__int128)b * b % m;
    e >>= 1;
  }
  return r;
}

inline long long primitive_root(long long p, long long pe) {
  // generator of (Z/p^e)^*, odd prime p
  long long phi_p = p - 1;
  std::vector<long long> qs;
  long long m = phi_p;
  for (long long d = 2; d * d <= m; ++d)
    while (m % d == 0) { qs.push_back(d); while (m % d == 0) m /= d; break; }
  if (m > 1) qs.push_back(m);
  long long g = 0;
  for (long long c = 2; c < p; ++c) {
    bool ok = true;
    for (long long qf : qs)
      if (pow_mod(c, phi_p / qf, p) == 1) { ok = false; break; }
    if (ok) { g = c; break; }
  }
  if (pe == p) return g;
  // lift: g generates mod p^e unless g^{p-1} = 1 mod p^2
  if (pow_mod(g, p - 1, p * p) == 1) g += p;
  return g % pe;
}

} // namespace detail

struct character_group {
  long long q = 1;
  bool two_exactly = false;  // q has factor 2^1: no primitive characters
  struct component {
    long long modulus;   // the prime power it belongs to
    long long order;     // cyclic order
    long long neg_one;   // discrete log of -1 in this component
    bool is_two_torsion_of_2e = false;  // the <-1> part of 2^e, e >= 3
    std::vector<long long> dlog;        // residue mod `modulus` -> exponent
    long long prime = 0;                // p for p^e components (0 for 2-parts)
    long long exponent_of_p = 1;        // e
  };
  std::vector<component> comps;
  long long lambda = 1;  // lcm of component orders

  explicit character_group(long long modulus) : q(modulus) {
    if (q < 1) throw std::invalid_argument("character modulus must be >= 1");
    long long m = q;
    long long two_e = 0;
    while (m % 2 == 0) { m /= 2; ++two_e; }
    if (two_e == 1) two_exactly = true;
    if (two_e == 2) {  // (Z/4)^* = <3>
      component c;
      c.modulus = 4; c.order = 2; c.neg_one = 1; c.prime = 2; c.exponent_of_p = 2;
      c.dlog.assign(4, -1);
      c.dlog[1] = 0; c.dlog[3] = 1;
      comps.push_back(std::move(c));
    } else if (two_e >= 3) {
      long long pe = 1LL << two_e;
      component cneg;  // <-1>
      cneg.modulus = pe; cneg.order = 2; cneg.neg_one = 1;
      cneg.is_two_torsion_of_2e = true; cneg.prime = 2; cneg.exponent_of_p = two_e;
      component c5;    // <5>
      c5.modulus = pe; c5.order = pe / 4; c5.neg_one = 0;
      c5.prime = 2; c5.exponent_of_p = two_e;
      cneg.dlog.assign(pe, -1);
      c5.dlog.assign(pe, -1);
      long long v = 1;
      for (long long t = 0; t < c5.order; ++t) {
        cneg.dlog[v] = 0; c5.dlog[v] = t;              // 5^t
        cneg.dlog[pe - v] = 1; c5.dlog[pe - v] = t;    // -5^t
        v = (__int128)v * 5 % pe;
      }
      comps.push_back(std::move(cneg));
      comps.push_back(std::move(c5));
    }
    // odd prime powers, ascending
    for (long long p = 3; p * p <= m || m > 1;) {
      if (m == 1) break;
      if (p * p > m) p = m;
      if (m % p == 0) {
        long long pe = 1, e = 0;
        while (m % p == 0) { m /= p; pe *= p; ++e; }
        component c;
        c.modulus = pe;
        c.order = pe / p * (p - 1);
        c.prime = p; c.exponent_of_p = e;
        long long g = detail::primitive_root(p, pe);
        c.dlog.assign(pe, -1);
        long long v = 1;
        for (long long t = 0; t < c.order; ++t) {
          c.dlog[v] = t;
          v = (__int128)v * g % pe;
        }
        c.neg_one = c.dlog[pe - 1];
        comps.push_back(std::move(c));
      } else {
        p += 2;
      }
    }
    // canonical ordering: ascending prime power, <-1> before <5> within 2^e
    std::stable_sort(comps.begin(), comps.end(), [](const component& a, const component& b) {
      if (a.modulus != b.modulus) return a.modulus < b.modulus;
      return a.is_two_torsion_of_2e && !b.is_two_torsion_of_2e;
    });
    for (const auto& c : comps) lambda = std::lcm(lambda, c.order);
  }

  long long character_count() const {
    long long n = 1;
    for (const auto& c : comps) n *= c.order;
    return n;  // = phi(q) (phi(2)=1 contributes nothing)
  }
};

struct dirichlet_character {
  long long q = 1;
  std::vector<long long> exponents;  // k_i in [0, order_i)
  int parity = 0;                    // a: chi(-1) = (-1)^a
  bool primitive = true;
  long long order = 1;
  long long index = 0;               // mixed radix rank of the exponent tuple

  std::shared_ptr<const character_group> group;  // shared so characters outlive their set

  bool is_trivial() const {
    for (long long k : exponents) if (k) return false;
    return true;
  }
  bool is_real() const { return order <= 2; }

  root_of_unity value(long long n) const {
    long long r = ((n % q) + q) % q;
    if (q == 1) { root_of_unity one; return one; }
    if (std::gcd(r, q) != 1) return root_of_unity::null();
    // exponent = sum_i k_i d_i(n) / m_i
    long long num = 0;
    const long long den = group->lambda;
    for (size_t i = 0; i < exponents.size(); ++i) {
      const auto& c = group->comps[i];
      long long d = c.dlog[r % c.modulus];
      long long contrib = (__int128)(exponents[i]) * d % c.order * (den / c.order) % den;
      num = (num + contrib) % den;
    }
    root_of_unity ru;
    ru.num = num;
    ru.den = den;
    return ru.reduced();
  }

  dirichlet_character conjugate() const {
    dirichlet_character c = *this;
    for (size_t i = 0; i < exponents.size(); ++i) {
      long long m = group->comps[i].order;
      c.exponents[i] = (m - exponents[i]) % m;
    }
    c.recompute_index();
    return c;
  }

  void recompute_index() {
    index = 0;
    for (size_t i = 0; i < exponents.size(); ++i)
      index = index * group->comps[i].order + exponents[i];
  }
};

class character_set {
 public:
  explicit character_set(long long q)
      : group_(std::make_shared<character_group>(q)) {
    build();
  }

  const character_group& group() const { return *group_; }

  const std::vector<dirichlet_character>& all() const { return all_; }

  std::vector<dirichlet_character> primitive() const {
    std::vector<dirichlet_character> out;
    for (const auto& c : all_)
      if (c.primitive) out.push_back(c);
    return out;
  }

 private:
  void build() {
    const auto& comps = group_->comps;
    long long total = group_->character_count();
    std::vector<long long> k(comps.size(), 0);
    for (long long idx = 0; idx < total; ++idx) {
      dirichlet_character chi;
      chi.q = group_->q;
      chi.group = group_;
      chi.exponents = k;
      chi.index = idx;
      // parity
      long long par2 = 0;  // exponent of chi(-1) in halves of unity: sum k_i neg1_i / m_i mod 1, times 2
      for (size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].neg_one == 0) continue;
        // neg_one is either 0 or m_i/2 (or 1 for order-2 components)
        long long twice = 2 * comps[i].neg_one % comps[i].order;
        if (twice != 0) throw std::logic_error("neg_one not 2-torsion");
        par2 = (par2 + k[i] * (comps[i].neg_one * 2 / comps[i].order)) % 2;
      }
      chi.parity = static_cast<int>(par2 % 2);
      // order
      long long ord = 1;
      for (size_t i = 0; i < comps.size(); ++i)
        ord = std::lcm(ord, comps[i].order / std::gcd(comps[i].order, k[i] == 0 ? comps[i].order : k[i]));
      chi.order = ord;
      // primitivity, component-wise conductor check
      bool prim = !group_->two_exactly || group_->q == 1;
      for (size_t i = 0; i < comps.size() && prim; ++i) {
        const auto& c = comps[i];
        if (c.prime == 2) {
          if (c.exponent_of_p == 2) {
            if (k[i] == 0) prim = false;      // induced mod 1
          } else if (!c.is_two_torsion_of_2e) {
            if (k[i] % 2 == 0) prim = false;  // <5>-exponent must be odd for conductor 2^e
          }
        } else {
          if (c.exponent_of_p == 1) {
            if (k[i] == 0) prim = false;
          } else {
            if (k[i] % c.prime == 0) prim = false;
          }
        }
      }
      chi.primitive = prim;
      all_.push_back(std::move(chi));
      // odometer
      for (size_t i = comps.size(); i-- > 0;) {
        if (++k[i] < comps[i].order) break;
        k[i] = 0;
      }
    }
    if (group_->q == 1) all_[0].primitive = true;
  }

  std::shared_ptr<character_group> group_;
  std::vector<dirichlet_character> all_;
};

inline std::vector<dirichlet_character> enumerate_primitive(long long q) {
  character_set s(q);
  return s.primitive();
}

// Gauss sum tau(chi) = sum_a chi(a) e(a/q); exact when all roots involved
// have denominator dividing 4 (e.g. tau(chi mod 4) = 2i exactly).
inline cbox gauss_sum(const dirichlet_character& chi) {
  cbox acc(interval(0.0), interval(0.0));
  for (long long a = 1; a <= chi.q; ++a) {
    root_of_unity v = chi.value(a);
    if (v.zero) continue;
    root_of_unity e_aq;
    e_aq.num = a % chi.q;
    e_aq.den = chi.q;
    root_of_unity prod;
    long long den = std::lcm(v.den, e_aq.den);
    prod.num = v.num * (den / v.den) + e_aq.num * (den / e_aq.den);
    prod.den = den;
    acc += prod.reduced().to_cbox();
  }
  return acc;
}

} // namespace zdv

#endif
