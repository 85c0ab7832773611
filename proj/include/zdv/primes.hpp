#ifndef ZDV_PRIMES_HPP
#define ZDV_PRIMES_HPP

// Odd-only bit sieve plus prime / prime-power iteration helpers.
// Memory is limit/16 bytes, so sieving to 10^8 stays within a few MB.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zdv {

class bit_sieve {
 public:
  explicit bit_sieve(long long limit) : limit_(limit) {
    if (limit < 2) limit_ = 2;
    long long n_odd = (limit_ - 1) / 2;  // odd numbers 3,5,... <= limit
    bits_.assign((n_odd + 63) / 64, ~0ull);
    for (long long p = 3; p * p <= limit_; p += 2) {
      if (!test(p)) continue;
      for (long long m = p * p; m <= limit_; m += 2 * p) clear(m);
    }
  }

  long long limit() const { return limit_; }

  bool is_prime(long long n) const {
    if (n < 2 || n > limit_) return false;
    if (n == 2) return true;
    if (n % 2 == 0) return false;
    return test(n);
  }

  template <typename F>
  void for_each_prime(long long lo, long long hi, F&& f) const {
    if (hi > limit_) throw std::out_of_range("prime iteration beyond sieve limit");
    if (lo <= 2 && hi >= 2) f(2LL);
    long long start = lo < 3 ? 3 : lo | 1;
    for (long long n = start; n <= hi; n += 2)
      if (test(n)) f(n);
  }

  // visits every prime power p^e <= hi with p^e >= lo, passing (p, p^e, e)
  template <typename F>
  void for_each_prime_power(long long lo, long long hi, F&& f) const {
    for_each_prime(2, hi, [&](long long p) {
      long long pe = p;
      int e = 1;
      while (pe <= hi) {
        if (pe >= lo) f(p, pe, e);
        if (pe > hi / p) break;
        pe *= p;
        ++e;
      }
    });
  }

 private:
  bool test(long long n) const {  // n odd, 3 <= n <= limit
    long long i = (n - 3) / 2;
    return (bits_[i >> 6] >> (i & 63)) & 1;
  }
  void clear(long long n) {
    long long i = (n - 3) / 2;
    bits_[i >> 6] &= ~(1ull << (i & 63));
  }

  long long limit_;
  std::vector<uint64_t> bits_;
};

// p if n = p^e, else 0; trial division, for one-off queries
inline long long prime_power_base(long long n) {
  if (n < 2) return 0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
  }
  return n;  // n itself prime
}

} // namespace zdv

#endif
