#ifndef ZDV_BERNOULLI_HPP
#define ZDV_BERNOULLI_HPP

// Even-index Bernoulli numbers B_2 .. B_50 as 36-digit literals, realized
// as 1-ulp intervals on first use.  Enough for Euler-Maclaurin correction
// order up to 20 and order-9 Stirling tails.

#include "zdv/interval.hpp"

#include <array>
#include <stdexcept>

namespace zdv {
namespace detail {

inline constexpr std::array<const char*, 25> bernoulli_even_literals = {
    "0.166666666666666666666666666666666667",  // B_2
    "-0.0333333333333333333333333333333333333",  // B_4
    "0.0238095238095238095238095238095238095",  // B_6
    "-0.0333333333333333333333333333333333333",  // B_8
    "0.0757575757575757575757575757575757576",  // B_10
    "-0.253113553113553113553113553113553114",  // B_12
    "1.16666666666666666666666666666666667",  // B_14
    "-7.09215686274509803921568627450980392",  // B_16
    "54.9711779448621553884711779448621554",  // B_18
    "-529.124242424242424242424242424242424",  // B_20
    "6192.12318840579710144927536231884058",  // B_22
    "-86580.2531135531135531135531135531136",  // B_24
    "1425517.16666666666666666666666666667",  // B_26
    "-27298231.0678160919540229885057471264",  // B_28
    "601580873.900642368384303868174835917",  // B_30
    "-15116315767.0921568627450980392156863",  // B_32
    "429614643061.166666666666666666666667",  // B_34
    "-13711655205088.3327721590879485616328",  // B_36
    "488332318973593.166666666666666666667",  // B_38
    "-19296579341940068.1486326681448632668",  // B_40
    "841693047573682615.000553709856035437",  // B_42
    "-40338071854059455413.0768115942028986",  // B_44
    "2115074863808199160560.14539007092199",  // B_46
    "-120866265222965259346027.311937082525",  // B_48
    "7500866746076964366855720.07575757576",  // B_50
};

} // namespace detail

// B_{2k} for 1 <= k <= 25
template <typename T = double>
basic_interval<T> bernoulli_even(int k) {
  if (k < 1 || k > 25) throw std::out_of_range("bernoulli_even: k in [1,25]");
  static const std::array<basic_interval<T>, 25> table = [] {
    std::array<basic_interval<T>, 25> t{};
    for (int i = 0; i < 25; ++i)
      t[i] = basic_interval<T>::from_literal(detail::bernoulli_even_literals[i]);
    return t;
  }();
  return table[k - 1];
}

// exact-integer-product interval for n!
template <typename T = double>
basic_interval<T> factorial_interval(long long n) {
  basic_interval<T> r(T(1));
  for (long long j = 2; j <= n; ++j) r = r * basic_interval<T>::from_integer(j);
  return r;
}

} // namespace zdv

#endif
