#ifndef ZDV_CONSTANTS_HPP
#define ZDV_CONSTANTS_HPP

// The constants pipeline behind the zero detection argument: solve the
// two-variable minimization, derive the dependent constants, and evaluate
// the (Q, T, eta) ledger in log-friendly form.  The solver and the derived
// constants live in long double intervals so that fourteen printed digits
// can be certified; the per-scale ledger narrows to double intervals.

#include "zdv/interval.hpp"
#include "zdv/logmag.hpp"
#include "zdv/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace zdv {

// outward-rounded narrowing; long double -> double conversion rounds to
// nearest, and double -> long double is exact, so the comparison is safe
inline interval narrow(const wide_interval& w) {
  double lo = static_cast<double>(w.lo), hi = static_cast<double>(w.hi);
  if (static_cast<long double>(lo) > w.lo)
    lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
  if (static_cast<long double>(hi) < w.hi)
    hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
  return interval(lo, hi);
}

struct constants_ledger {
  wide_interval alpha, A, R, V, A0, A1;
  rat xi = rat(10000001LL, 10000000LL);
  rat delta = rat(2LL, 3LL);
};

struct secondary_constants {
  wide_interval R, V, A0, A1;
};

namespace detail {

// h(alpha) = A(alpha) (log(4 e alpha) + (alpha - 1) log 2) with A eliminated
// through the constraint 4 e alpha (2/R)^(alpha-1) = delta, R = sqrt(A^2+1),
// which gives R = 2 (4 e alpha / delta)^(1/(alpha-1))
struct objective_point {
  wide_interval A, R, h, dh;
};

inline objective_point eval_objective(const wide_interval& a,
                                      const wide_interval& delta) {
  const wide_interval& l2 = consts::ln2<long double>();
  wide_interval one(1.0L);
  wide_interval am1 = a - one;
  wide_interval lfa = log(wide_interval(4.0L) * consts::e<long double>() * a);
  wide_interval w = lfa + am1 * l2;
  wide_interval dw = one / a + l2;
  wide_interval lq = lfa - log(delta);      // log(4 e alpha / delta)
  wide_interval R = exp(l2 + lq / am1);
  wide_interval A = sqrt(R * R - one);
  wide_interval dlr = (am1 / a - lq) / (am1 * am1);
  wide_interval dA = R * R * dlr / A;
  objective_point p;
  p.A = A;
  p.R = R;
  p.h = A * w;
  p.dh = dA * w + A * dw;
  return p;
}

inline int certified_sign(const wide_interval& x) {
  if (x.lo > 0.0L) return 1;
  if (x.hi < 0.0L) return -1;
  return 0;
}

} // namespace detail

// log of the minimized quantity, A (log(4 e alpha) + (alpha - 1) log 2)
inline wide_interval objective_log(const wide_interval& alpha,
                                   const wide_interval& A) {
  return A * (log(wide_interval(4.0L) * consts::e<long double>() * alpha) +
              (alpha - wide_interval(1.0L)) * consts::ln2<long double>());
}

// 4 e alpha (2 / sqrt(A^2+1))^(alpha-1) - delta; encloses 0 at a solution
inline wide_interval constraint_residual(const wide_interval& alpha,
                                         const wide_interval& A,
                                         const rat& delta) {
  wide_interval one(1.0L);
  wide_interval r = sqrt(A * A + one);
  wide_interval lhs = wide_interval(4.0L) * consts::e<long double>() * alpha *
                      exp((alpha - one) * (consts::ln2<long double>() - log(r)));
  return lhs - delta.enclosure<long double>();
}

// constrained minimizer of (4 e alpha 2^(alpha-1))^A; certified-sign
// bisection on the derivative of the reduced objective, stopping once the
// bracket is below 1e-16 or the sign at the midpoint is no longer decidable
inline std::pair<wide_interval, wide_interval> solve_alpha_A(const rat& delta) {
  if (!(rat(0) < delta && delta < rat(1)))
    throw std::invalid_argument("solve_alpha_A: delta must lie in (0, 1)");
  wide_interval d = delta.enclosure<long double>();
  static const long double grid[] = {1.5L, 2.0L, 3.0L, 5.0L, 8.0L,
                                     13.0L, 21.0L, 34.0L, 55.0L};
  long double a = 0.0L, b = 0.0L;
  for (long double g : grid) {
    int s = detail::certified_sign(detail::eval_objective(wide_interval(g), d).dh);
    if (s < 0) a = g;
    if (s > 0 && a != 0.0L) {
      b = g;
      break;
    }
  }
  if (a == 0.0L || b == 0.0L)
    throw std::runtime_error("solve_alpha_A: no interior minimum bracketed");
  for (int it = 0; it < 200 && b - a > 1e-17L * b; ++it) {
    long double m = a + 0.5L * (b - a);
    int s = detail::certified_sign(detail::eval_objective(wide_interval(m), d).dh);
    if (s == 0) {
      m = a + 0.46875L * (b - a);
      s = detail::certified_sign(detail::eval_objective(wide_interval(m), d).dh);
      if (s == 0) break;  // at the precision floor; bracket is the answer
    }
    (s < 0 ? a : b) = m;
  }
  wide_interval alpha(a, b);
  detail::objective_point p = detail::eval_objective(alpha, d);
  if (!p.dh.contains(0.0L))
    throw std::runtime_error("solve_alpha_A: stationarity residual excludes 0");
  return {alpha, p.A};
}

// R, V, A0 as direct formulas; A1 as the certified-unique root above 2 of
// 1/V = A1 exp(1 - A1 (alpha-1)/(2 alpha))
inline secondary_constants derive_secondary(const wide_interval& alpha,
                                            const wide_interval& A) {
  wide_interval one(1.0L);
  secondary_constants out;
  out.R = sqrt(A * A + one);
  wide_interval am1 = alpha - one;
  out.V = wide_interval(2.0L) *
              exp(log(wide_interval(4.0L) * consts::e<long double>() * alpha) / am1) +
          wide_interval::ratio(19, 50);
  out.A0 = one / (consts::e<long double>() * out.V);

  wide_interval c = am1 / (wide_interval(2.0L) * alpha);
  auto phi = [&](const wide_interval& x) {
    return x * exp(one - x * c) - one / out.V;
  };
  // no root in [2, 2.3]: positive on a step-0.01 cover of subboxes
  for (int j = 0; j < 30; ++j) {
    wide_interval sub(2.0L + 0.01L * j, 2.0L + 0.01L * (j + 1));
    if (!(phi(sub).lo > 0.0L))
      throw std::runtime_error("derive_secondary: positivity scan failed");
  }
  // strictly decreasing beyond 2.3: the derivative factor 1 - c x is
  // negative there, so at most one crossing on (2.3, 60]
  if (!((c * wide_interval(2.3L)).lo > 1.0L))
    throw std::runtime_error("derive_secondary: monotonicity check failed");
  long double a = 2.3L, b = 60.0L;
  if (!(phi(wide_interval(a)).lo > 0.0L) || !(phi(wide_interval(b)).hi < 0.0L))
    throw std::runtime_error("derive_secondary: A1 bracket failure");
  for (int it = 0; it < 200 && b - a > 1e-16L * b; ++it) {
    long double m = a + 0.5L * (b - a);
    int s = detail::certified_sign(phi(wide_interval(m)));
    if (s == 0) break;
    (s > 0 ? a : b) = m;
  }
  out.A1 = wide_interval(a, b);
  return out;
}

inline constants_ledger solve_ledger(const rat& delta = rat(2LL, 3LL)) {
  constants_ledger lg;
  lg.delta = delta;
  auto [alpha, A] = solve_alpha_A(delta);
  lg.alpha = alpha;
  lg.A = A;
  secondary_constants s = derive_secondary(alpha, A);
  lg.R = s.R;
  lg.V = s.V;
  lg.A0 = s.A0;
  lg.A1 = s.A1;
  return lg;
}

inline const constants_ledger& default_ledger() {
  static const constants_ledger lg = solve_ledger();
  return lg;
}

// 2 (4 e alpha)^(1/(alpha-1)), intersected with the algebraically equal
// (4 e alpha 2^(alpha-1))^(1/(alpha-1)) as a cross-check
inline wide_interval detection_constant(const constants_ledger& lg) {
  wide_interval one(1.0L);
  wide_interval am1 = lg.alpha - one;
  wide_interval lfa = log(wide_interval(4.0L) * consts::e<long double>() * lg.alpha);
  wide_interval direct = wide_interval(2.0L) * exp(lfa / am1);
  wide_interval merged = exp((lfa + am1 * consts::ln2<long double>()) / am1);
  auto both = intersect(direct, merged);
  if (!both)
    throw std::logic_error("detection_constant: equivalent forms disagree");
  return *both;
}

inline wide_interval detection_constant() {
  return detection_constant(default_ledger());
}

// admissible eta window [1/(3 A log(QT)), 1/(10 A)]
inline std::pair<interval, interval> eta_range(
    double Q, double T, const constants_ledger& lg = default_ledger()) {
  if (!(Q >= 1.0) || !(T >= 1.0))
    throw std::invalid_argument("eta_range: need Q >= 1 and T >= 1");
  wide_interval L = log(wide_interval(Q) * wide_interval(T));
  wide_interval one(1.0L);
  interval lo = narrow(one / (wide_interval(3.0L) * lg.A * L));
  interval hi = narrow(one / (wide_interval(10.0L) * lg.A));
  return {lo, hi};
}

struct ledger_entry {
  double Q = 0.0, T = 0.0, eta = 0.0;
  interval script_L;              // log(QT)
  interval N_script;              // A eta (1+1e-7)^{-1} ((2/3) script_L + 13.04) + 9
  interval M_eta;                 // (alpha - 1) N_script
  logmag N_eta;                   // exp(A0 M_eta / eta)
  logmag N_eta_star;              // exp(A1 M_eta / eta)
  interval N_script_simplified;   // A eta ((4/3) log Q + 13.04); the quoted
                                  // T = Q form, which drops the +9
  bool simplified_form_equal = false;  // full form at xi eta == simplified + 9
  bool m_lower_certified = false;      // M_{xi eta} >= 63.925 over the window
  bool n_lower_certified = false;      // N_{xi eta} > 10^106 Q^3.175142 over it
  std::string note;
};

namespace detail {

// N_script evaluated at x (the caller passes eta or xi*eta), double interval
inline interval n_script_at(const interval& x, const interval& coeff,
                            const interval& A_d) {
  static const interval nine = interval::from_integer(9);
  static const interval inv_xi = rat(10000000LL, 10000001LL).enclosure();
  return A_d * x * inv_xi * coeff + nine;
}

} // namespace detail

inline ledger_entry ledger_at(double Q, double T, double eta,
                              const constants_ledger& lg = default_ledger()) {
  auto [eta_lo, eta_hi] = eta_range(Q, T, lg);
  if (eta < eta_lo.lo || eta > eta_hi.hi)
    throw std::domain_error("ledger_at: eta outside the admissible window");

  interval A_d = narrow(lg.A), A0_d = narrow(lg.A0), A1_d = narrow(lg.A1);
  interval am1_d = narrow(lg.alpha - wide_interval(1.0L));
  static const interval c1304 = interval::from_literal("13.04");
  static const interval xi_d = rat(10000001LL, 10000000LL).enclosure();
  const interval& l10e = consts::log10_e<double>();

  ledger_entry e;
  e.Q = Q;
  e.T = T;
  e.eta = eta;
  e.script_L = log(interval(Q) * interval(T));
  interval coeff = interval::ratio(2, 3) * e.script_L + c1304;
  e.N_script = detail::n_script_at(interval(eta), coeff, A_d);
  e.M_eta = am1_d * e.N_script;
  e.N_eta = logmag::from_log10(A0_d * e.M_eta / interval(eta) * l10e);
  e.N_eta_star = logmag::from_log10(A1_d * e.M_eta / interval(eta) * l10e);

  interval lQ = log(interval(Q));
  e.N_script_simplified =
      A_d * interval(eta) * (interval::ratio(4, 3) * lQ + c1304);

  if (Q == T) {
    // the quoted T = Q ledger line omits the +9; every certified fact below
    // keeps it, and the xi (1+1e-7)^{-1} cancellation is exact
    e.note = "simplified N form drops the +9 term; certification uses the full form";
    static const interval nine = interval::from_integer(9);
    interval inv_xi = rat(10000000LL, 10000001LL).enclosure();

    // fact 1: full form at xi eta equals simplified + 9, across the window
    bool ok1 = true;
    for (int j = 0; j <= 32 && ok1; ++j) {
      interval ej = eta_lo + interval::ratio(j, 32) * (eta_hi - eta_lo);
      interval lhs = detail::n_script_at(xi_d * ej, coeff, A_d);
      interval rhs = A_d * ej * (interval::ratio(4, 3) * lQ + c1304) + nine;
      if (!lhs.intersects(rhs)) ok1 = false;
    }
    e.simplified_form_equal = ok1;

    // fact 2: M at xi eta is increasing in eta (positive slope coefficient),
    // so its minimum over the window sits at the lower endpoint
    interval slope2 = am1_d * A_d * xi_d * inv_xi * coeff;
    interval m_min = am1_d * detail::n_script_at(xi_d * eta_lo, coeff, A_d);
    bool ok2 = slope2.lo > 0.0 &&
               m_min.lo >= interval::ratio(63925, 1000).hi;
    for (int j = 0; j <= 32 && ok2; ++j) {
      interval ej = eta_lo + interval::ratio(j, 32) * (eta_hi - eta_lo);
      interval mj = am1_d * detail::n_script_at(xi_d * ej, coeff, A_d);
      if (!(mj.lo >= interval::ratio(63925, 1000).hi)) ok2 = false;
    }
    e.m_lower_certified = ok2;

    // fact 3: log10 N at xi eta = C9/eta + C0 with C9 > 0, so it is
    // decreasing in eta and its minimum sits at the upper endpoint
    interval C9 = nine * A0_d * am1_d * l10e * inv_xi;
    interval C0 = A0_d * am1_d * A_d * inv_xi * coeff * l10e;
    interval target = interval::from_integer(106) +
                      interval::from_literal("3.175142") * lQ * l10e;
    bool ok3 = C9.lo > 0.0 && (C9 / eta_hi + C0).lo > target.hi;
    for (int j = 0; j <= 32 && ok3; ++j) {
      interval ej = eta_lo + interval::ratio(j, 32) * (eta_hi - eta_lo);
      if (!((C9 / ej + C0).lo > target.hi)) ok3 = false;
    }
    e.n_lower_certified = ok3;
  }
  return e;
}

} // namespace zdv

#endif
