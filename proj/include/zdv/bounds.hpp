#ifndef ZDV_BOUNDS_HPP
#define ZDV_BOUNDS_HPP

// Evaluators for the explicit zero estimates: zero-free region boundaries,
// the zero-repulsion threshold, the zero-density bounds, and the disc-count
// bounds near Re(s) = 1.  Every evaluator returns a rigorous enclosure of
// the stated right-hand side; nothing here is approximate.
//
// verify_against_zeros compares evaluated bounds against certified zero data
// and issues bound_certificates.  Certificate names mirror the source labels
// ("thm:GZFR", "lem:Linnik", ...) so runs can be grepped against the
// reference text.  Two kinds of failure are kept apart:
//   - a parameter outside the statement's quantifier range (a sigma or r
//     the statement never speaks about) is a caller error and throws;
//   - a scale or data hypothesis that the corpus simply does not meet
//     (Q too small, |t| too low for the trivial character) yields verdict
//     "holds" with a note beginning "not applicable": a conditional
//     statement is not contradicted by data outside its hypothesis, and it
//     is never evaluated out of domain.

#include "zdv/certificate.hpp"
#include "zdv/characters.hpp"
#include "zdv/constants.hpp"
#include "zdv/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zdv {

namespace detail {

inline interval log10_ivl(const interval& x) {
  return log2(x) * consts::log10_2<double>();
}

inline interval imax(const interval& a, const interval& b) {
  return interval(std::max(a.lo, b.lo), std::max(a.hi, b.hi));
}

} // namespace detail

// ---------- zero-free regions ----------

// width constant of the one-exception zero-free region
inline const interval& zfr_c1() {
  static const interval v = interval(1.0) / interval::from_literal("9.645908801");
  return v;
}

// 1 - c1/log max{Q, Q|t|}: at height t, at most one zero of the product over
// all primitive characters of conductor <= Q lies on or right of this line,
// and such a zero must be real, simple, and quadratic with conductor > 400000
inline interval zfr_boundary(double Q, const interval& t) {
  if (!(Q >= 3)) throw std::invalid_argument("zfr_boundary: Q >= 3 required");
  interval m = detail::imax(interval(Q), interval(Q) * abs(t));
  return 1.0 - zfr_c1() / log(m);
}

inline interval zfr_boundary(double Q, double t) {
  return zfr_boundary(Q, interval(t));
}

// (15 - 10 sqrt 2) / (2 (5 - sqrt 5)): window constant for real zeros of the
// aggregated quadratic product; at most one real zero right of
// 1 - page_constant()/log Q
inline const interval& page_constant() {
  static const interval v = (15.0 - 10.0 * sqrt(interval(2.0))) /
                            (2.0 * (5.0 - sqrt(interval(5.0))));
  return v;
}

// (15 - 10 sqrt 2) / (5 - sqrt 5), twice the window constant: repulsion
// numerator for a pair of real zeros at distinct quadratic conductors
inline const interval& landau_constant() {
  static const interval v = (15.0 - 10.0 * sqrt(interval(2.0))) /
                            (5.0 - sqrt(interval(5.0)));
  return v;
}

// 1 - landau_constant()/log(q q'/17): the smaller of two real zeros attached
// to distinct real primitive characters mod q and q' lies left of this line
inline interval landau_pair_bound(long long q, long long qp) {
  if (q < 1 || qp < 1 || q * qp <= 17)
    throw std::domain_error("landau_pair_bound: q q' > 17 required");
  interval x = interval::from_integer(q) * interval::from_integer(qp) / interval(17.0);
  return 1.0 - landau_constant() / log(x);
}

// ---------- zero-density bounds ----------

enum class density_variant { thm_N, thm_Nstar, cor_N, cor_Nstar };

inline const char* density_name(density_variant v) {
  switch (v) {
    case density_variant::thm_N: return "thm:GLFZDE.N";
    case density_variant::thm_Nstar: return "thm:GLFZDE.Nstar";
    case density_variant::cor_N: return "cor:GLFZDE.N";
    default: return "cor:GLFZDE.Nstar";
  }
}

// log-domain value of the density right-hand side:
//   thm_N      10^88 (10^421 Q^99)^(1-sigma),   sigma >= 39/40
//   thm_Nstar  10^93 min{1, (1-beta_1) log Q} (10^466 Q^170)^(1-sigma)
//   cor_N      10^88 (10^421 Q^127)^(1-sigma),  sigma >= 0
//   cor_Nstar  10^93 min{1, (1-beta_1) log Q} (10^466 Q^198)^(1-sigma)
// With no gap supplied the min factor is capped at 1 (no exceptional zero
// assumed); a supplied gap must be the exact quantity 1 - beta_1(Q).
inline logmag density_bound(density_variant v, double sigma, double Q,
                            std::optional<double> beta1_gap = std::nullopt) {
  if (!(Q >= 3)) throw std::invalid_argument("density_bound: Q >= 3 required");
  bool thm = v == density_variant::thm_N || v == density_variant::thm_Nstar;
  bool star = v == density_variant::thm_Nstar || v == density_variant::cor_Nstar;
  if (thm && !(sigma >= 39.0 / 40.0))
    throw std::invalid_argument(std::string("density_bound: ") + density_name(v) +
                                " needs sigma >= 39/40; below that use " +
                                density_name(star ? density_variant::cor_Nstar
                                                  : density_variant::cor_N));
  if (!thm && !(sigma >= 0))
    throw std::invalid_argument("density_bound: sigma >= 0 required");
  long long base = star ? 93 : 88;
  long long c0 = star ? 466 : 421;
  long long ce = star ? (thm ? 170 : 198) : (thm ? 99 : 127);
  interval l10 = interval::from_integer(base) +
                 (interval::from_integer(c0) +
                  interval::from_integer(ce) * detail::log10_ivl(interval(Q))) *
                     (1.0 - interval(sigma));
  if (star && beta1_gap) {
    if (!(*beta1_gap > 0))
      throw std::invalid_argument("density_bound: beta1_gap must be positive");
    interval m = interval(*beta1_gap) * log(interval(Q));
    if (m.hi <= 1.0)
      l10 = l10 + detail::log10_ivl(m);
    else if (m.lo < 1.0)
      l10 = l10 + interval(detail::log10_ivl(m).lo, 0.0);  // min straddles 1
  }
  return logmag::from_log10(l10);
}

// 0.64 Q^3 log Q: the unconditional zero count at sigma = 0, Q >= 10^4
inline logmag basic_density_bound(double Q) {
  if (!(Q >= 1e4))
    throw std::invalid_argument("basic_density_bound: Q >= 10^4 required");
  interval l10 = detail::log10_ivl(interval::from_literal("0.64")) +
                 3.0 * detail::log10_ivl(interval(Q)) +
                 detail::log10_ivl(log(interval(Q)));
  return logmag::from_log10(l10);
}

// 1.180016 x 10^87 (e^968.1455 Q^99)^(1-sigma) for sigma >= 1 - 1/(10 A):
// sharper than thm_N on its range since 1.180016e87 < 1e88 and
// e^968.1455 < 10^421
inline logmag nonexceptional_bound(double sigma, double Q) {
  if (!(Q >= 3)) throw std::invalid_argument("nonexceptional_bound: Q >= 3 required");
  static const double sigma_min =
      (1.0 - interval(1.0) / (10.0 * narrow(default_ledger().A))).lo;
  if (!(sigma >= sigma_min))
    throw std::invalid_argument("nonexceptional_bound: sigma >= 1 - 1/(10 A) required");
  interval l10 = interval::from_integer(87) +
                 detail::log10_ivl(interval::from_literal("1.180016")) +
                 (interval::from_literal("968.1455") / consts::ln10<double>() +
                  99.0 * detail::log10_ivl(interval(Q))) *
                     (1.0 - interval(sigma));
  return logmag::from_log10(l10);
}

// ---------- zero repulsion ----------

struct dh_result {
  std::optional<interval> sigma_bound;
  bool applicable = false;  // gap consistent with beta_1 >= 1 - c1/log Q
  bool vacuous = false;     // threshold not certainly below 1
  std::string note;
};

// Under beta_1(Q) >= 1 - c1/log Q, every other zero beta + i gamma with
// beta > 1/2 and |gamma| <= T satisfies
//   beta <= 1 - log(1/((1-beta_1) D)) / (104.645 + 54.156 log Q + 16.84 log T),
//   D = 670564.676 + 347029.502 log Q + 107906.278 log T.
// The bound is vacuous once (1-beta_1) D >= 1.
inline dh_result dh_repulsion(double Q, double T, double beta1_gap) {
  if (!(Q > 400000) || !(T >= 1) || !(beta1_gap > 0))
    throw std::invalid_argument(
        "dh_repulsion: Q > 400000, T >= 1, beta1_gap > 0 required");
  dh_result res;
  interval ceiling = zfr_c1() / log(interval(Q));
  if (!(beta1_gap <= ceiling.lo)) {
    res.note = "not applicable: requires beta_1 >= 1 - c1/log Q";
    return res;
  }
  res.applicable = true;
  interval lnQ = log(interval(Q)), lnT = log(interval(T));
  interval D = interval::from_literal("670564.676") +
               interval::from_literal("347029.502") * lnQ +
               interval::from_literal("107906.278") * lnT;
  interval den = interval::from_literal("104.645") +
                 interval::from_literal("54.156") * lnQ +
                 interval::from_literal("16.84") * lnT;
  interval arg = interval(beta1_gap) * D;
  res.sigma_bound = 1.0 + log(arg) / den;
  if (!(arg.hi < 1.0)) {
    res.vacuous = true;
    res.note = "vacuous: (1 - beta_1) D >= 1, threshold reaches 1";
  }
  return res;
}

// 506921 (1 - beta_1) (log Q) (e^104.645 Q^71)^(1-sigma): the rearranged
// repulsion inequality, at least 1 throughout the exceptional sigma range
inline logmag dh_lower_bound(double Q, double sigma, double beta1_gap) {
  if (!(Q > 400000) || !(beta1_gap > 0))
    throw std::invalid_argument("dh_lower_bound: Q > 400000, beta1_gap > 0 required");
  interval l10 = detail::log10_ivl(interval::from_integer(506921)) +
                 detail::log10_ivl(interval(beta1_gap)) +
                 detail::log10_ivl(log(interval(Q))) +
                 (interval::from_literal("104.645") / consts::ln10<double>() +
                  71.0 * detail::log10_ivl(interval(Q))) *
                     (1.0 - interval(sigma));
  return logmag::from_log10(l10);
}

// ---------- disc counts near Re(s) = 1 ----------

// r (2 log(qT) - 1) + 4 bounds the zero count in the closed disc of radius
// r <= 1 about 1 + it, for any |t| <= T
inline interval lemma29_bound(double r, double q, double T) {
  if (!(r > 0) || !(r <= 1))
    throw std::invalid_argument("lemma29_bound: 0 < r <= 1 required");
  if (!(q >= 1) || !(T >= 1))
    throw std::invalid_argument("lemma29_bound: q >= 1 and T >= 1 required");
  return interval(r) * (2.0 * log(interval(q) * interval(T)) - interval(1.0)) +
         interval(4.0);
}

// r (1 + 1e-7)^{-1} ((2/3) log(QT) + 13.04) + 2 on 1/(3 log QT) <= r <= 1/10,
// for conductors q <= Q with max{Q, T} > 10^4
inline interval cor212_bound(double r, double Q, double T) {
  if (!(Q >= 3) || !(T >= 1) || !(std::max(Q, T) > 1e4))
    throw std::invalid_argument(
        "cor212_bound: Q >= 3, T >= 1, max{Q, T} > 10^4 required");
  interval lnQT = log(interval(Q) * interval(T));
  if (!(r <= 0.1) || !((3.0 * interval(r) * lnQT).hi >= 1.0))
    throw std::invalid_argument("cor212_bound: r in [1/(3 log QT), 1/10] required");
  return interval(r) * interval::ratio(10000000, 10000001) *
             (interval::ratio(2, 3) * lnQT + interval::from_literal("13.04")) +
         interval(2.0);
}

// bound for the sum of Re(1/(1 + r + it - rho)) over zeros rho with
// |1 + it - rho| <= r, valid for 0 < r < 1/2 (and |t| >= 3e12 when q = 1).
// alt_constant selects 4.7908, the value displayed where the downstream
// proof cites this bound; the statement itself has 4.7098.  The discrepancy
// is surfaced in certificate notes, not resolved here.
inline interval prop211_bound(double r, double q, double T, bool alt_constant = false) {
  if (!(r > 0) || !(r < 0.5))
    throw std::invalid_argument("prop211_bound: 0 < r < 1/2 required");
  if (!(q >= 1) || !(T >= 1))
    throw std::invalid_argument("prop211_bound: q >= 1 and T >= 1 required");
  interval R(r);
  interval lnqT = log(interval(q) * interval(T));
  interval c = interval::from_literal(alt_constant ? "4.7908" : "4.7098");
  interval pi_term = interval(4.0) / consts::pi<double>() - interval(1.0);
  return (lnqT + c) / (4.0 + 8.0 * R) +
         pi_term * log1p(interval(1.0) / R) / (1.0 + 2.0 * R) +
         interval::from_literal("2.6908") +
         (8.0 * R / ((1.0 + 2.0 * R) * (1.0 + 2.0 * R))) * lemma29_bound(r, q, T) +
         interval(1.0) / R;
}

struct disc_bounds_result {
  std::optional<interval> lemma29;        // count bound, 0 < r <= 1
  std::optional<interval> cor212;         // count bound, corollary range
  std::optional<interval> prop211;        // sum bound, 0 < r < 1/2
  std::optional<interval> prop211_count;  // 2r * prop211, count scale
  std::string smallest;                   // least count-scale bound present
};

// evaluates all three at once; an entry is absent when r (or the scale)
// falls outside that statement's own range
inline disc_bounds_result disc_bounds(double r, double q, double Q, double T) {
  disc_bounds_result out;
  try {
    out.lemma29 = lemma29_bound(r, q, T);
  } catch (const std::invalid_argument&) {}
  try {
    out.cor212 = cor212_bound(r, Q, T);
  } catch (const std::invalid_argument&) {}
  try {
    out.prop211 = prop211_bound(r, q, T);
    // one disc zero contributes at least 1/(2r) to the sum
    out.prop211_count = 2.0 * interval(r) * *out.prop211;
  } catch (const std::invalid_argument&) {}
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const std::optional<interval>& b, const char* name) {
    if (b && b->hi < best) {
      best = b->hi;
      out.smallest = name;
    }
  };
  consider(out.lemma29, "lem:Linnik");
  consider(out.cor212, "cor:Linnik_lemma");
  consider(out.prop211_count, "prop:HB_zero-count");
  return out;
}

namespace detail {

// envelope used on the way to the fixed-coefficient disc count: for r in the
// corollary range, twice the sum bound stays below
// (23/36) L + (5/3)(4/pi - 1) log(1 + 3L) + 11.7111 with L = log(QT)
inline interval cor212_proof_envelope(double QT) {
  interval L = log(interval(QT));
  return interval::ratio(23, 36) * L +
         interval::ratio(5, 3) *
             (interval(4.0) / consts::pi<double>() - interval(1.0)) *
             log1p(3.0 * L) +
         interval::from_literal("11.7111");
}

} // namespace detail

// ---------- certificates over computed zeros ----------

struct certificate_request {
  std::string name;                 // statement identifier, e.g. "thm:GZFR"
  double sigma = 0.0;               // density / repulsion thresholds
  double Q = 0.0;                   // aggregate scale; 0 = corpus max modulus
  double T = 0.0;                   // height cap; 0 = least certified height
  double r = 0.0;                   // disc radius
  double t = 0.0;                   // disc center height
  long long q = 0;                  // disc modulus
  long long char_index = -1;        // disc character
  std::optional<double> beta1_gap;  // assumed exceptional gap 1 - beta_1
};

namespace detail {

struct count_pair {
  long long certain = 0;   // enclosure entirely inside the region
  long long possible = 0;  // enclosure meets the region
};

inline const zero_list* find_list(const std::vector<zero_list>& corpus,
                                  long long q, long long index) {
  for (const zero_list& zl : corpus)
    if (zl.id.q == q && zl.id.index == index) return &zl;
  return nullptr;
}

// every primitive character of conductor <= Q present and certified to T
inline void require_complete(const std::vector<zero_list>& corpus, double Q,
                             double T) {
  for (long long q = 1; q <= static_cast<long long>(Q); ++q) {
    for (const dirichlet_character& chi : enumerate_primitive(q)) {
      const zero_list* zl = find_list(corpus, q, chi.index);
      if (!zl || zl->complete_to < T - 1e-9)
        throw std::runtime_error(
            "verify_against_zeros: corpus incomplete for modulus " +
            std::to_string(q) + " character " + std::to_string(chi.index) +
            " at height " + std::to_string(T));
    }
  }
}

// counts over all records with modulus <= Q; the predicate reports
// (possibly inside, certainly inside) for one record
template <class Pred>
inline count_pair count_records(const std::vector<zero_list>& corpus, double Q,
                                Pred pred) {
  count_pair c;
  for (const zero_list& zl : corpus) {
    if (zl.id.q > Q) continue;
    for (const zero_record& rec : zl.records) {
      auto [poss, cert] = pred(rec);
      if (poss) ++c.possible;
      if (cert) ++c.certain;
    }
  }
  return c;
}

inline std::pair<bool, bool> in_height_window(const zero_record& rec, double T) {
  bool poss = rec.gamma.lo <= T && rec.gamma.hi >= -T;
  bool cert = rec.gamma.lo >= -T && rec.gamma.hi <= T;
  return {poss, cert};
}

// verdict for an exact observed count against an integer allowance
inline void set_allowance_verdict(bound_certificate& cert, const count_pair& c,
                                  long long allowed) {
  cert.observed_count = c.possible;
  cert.bound = logmag::from_integer(allowed);
  if (c.possible <= allowed) cert.verdict = verdict_t::holds;
  else if (c.certain > allowed) cert.verdict = verdict_t::violated;
  else cert.verdict = verdict_t::inconclusive;
}

// verdict for an exact observed count against an interval bound
inline void set_interval_verdict(bound_certificate& cert, const count_pair& c,
                                 const interval& bound) {
  cert.observed_count = c.possible;
  cert.bound = logmag::from_interval(bound);
  if (static_cast<double>(c.possible) <= bound.lo) cert.verdict = verdict_t::holds;
  else if (static_cast<double>(c.certain) > bound.hi) cert.verdict = verdict_t::violated;
  else cert.verdict = verdict_t::inconclusive;
}

// verdict for an exact observed count against a log-domain bound
inline void set_logmag_verdict(bound_certificate& cert, const count_pair& c,
                               const logmag& bound) {
  cert.observed_count = c.possible;
  cert.bound = bound;
  int up = logmag::compare(logmag::from_integer(c.possible), bound);
  if (up < 0) cert.verdict = verdict_t::holds;
  else if (logmag::compare(logmag::from_integer(c.certain), bound) > 0)
    cert.verdict = verdict_t::violated;
  else cert.verdict = verdict_t::inconclusive;
}

inline void mark_not_applicable(bound_certificate& cert, const std::string& why) {
  cert.verdict = verdict_t::holds;
  cert.notes = "not applicable: " + why;
}

} // namespace detail

// Evaluates each request against the corpus.  The corpus must be complete
// for every scale a request touches (all primitive characters of conductor
// <= Q, certified to the needed height); incompleteness throws, it never
// passes silently.
inline std::vector<bound_certificate> verify_against_zeros(
    const std::vector<zero_list>& corpus,
    const std::vector<certificate_request>& requests) {
  double corpus_q = 1, corpus_t = std::numeric_limits<double>::infinity();
  for (const zero_list& zl : corpus) {
    corpus_q = std::max(corpus_q, static_cast<double>(zl.id.q));
    corpus_t = std::min(corpus_t, zl.complete_to);
  }
  if (corpus.empty()) throw std::runtime_error("verify_against_zeros: empty corpus");

  std::vector<bound_certificate> out;
  for (const certificate_request& req : requests) {
    bound_certificate cert;
    cert.name = req.name;
    double Q = req.Q > 0 ? req.Q : corpus_q;
    double T = req.T > 0 ? req.T : corpus_t;
    cert.inputs.emplace_back("Q", Q);

    auto density_request = [&](density_variant v) {
      detail::require_complete(corpus, Q, std::min(Q, corpus_t));
      if (Q > corpus_t)
        throw std::runtime_error(
            "verify_against_zeros: density count needs |gamma| <= Q = " +
            std::to_string(Q) + " but corpus is certified only to " +
            std::to_string(corpus_t));
      cert.inputs.emplace_back("sigma", req.sigma);
      bool star = v == density_variant::thm_Nstar || v == density_variant::cor_Nstar;
      if (star && req.beta1_gap) cert.inputs.emplace_back("beta1_gap", *req.beta1_gap);
      logmag bnd = density_bound(v, req.sigma, Q, req.beta1_gap);
      auto cp = detail::count_records(corpus, Q, [&](const zero_record& rec) {
        auto [gp, gc] = detail::in_height_window(rec, Q);
        return std::pair<bool, bool>{gp && rec.beta.hi >= req.sigma,
                                     gc && rec.beta.lo >= req.sigma};
      });
      detail::set_logmag_verdict(cert, cp, bnd);
      if (star && !req.beta1_gap)
        cert.notes = "no exceptional zero assumed; min factor capped at 1";
    };

    if (req.name == "thm:GLFZDE.N") density_request(density_variant::thm_N);
    else if (req.name == "thm:GLFZDE.Nstar") density_request(density_variant::thm_Nstar);
    else if (req.name == "cor:GLFZDE.N") density_request(density_variant::cor_N);
    else if (req.name == "cor:GLFZDE.Nstar") density_request(density_variant::cor_Nstar);
    else if (req.name == "lem:basic_density") {
      if (Q < 1e4) {
        detail::require_complete(corpus, Q, std::min(Q, corpus_t));
        auto cp = detail::count_records(corpus, Q, [&](const zero_record& rec) {
          return detail::in_height_window(rec, Q);
        });
        cert.observed_count = cp.possible;
        detail::mark_not_applicable(cert, "statement needs Q >= 10^4");
      } else {
        detail::require_complete(corpus, Q, Q);
        auto cp = detail::count_records(corpus, Q, [&](const zero_record& rec) {
          return detail::in_height_window(rec, Q);
        });
        detail::set_logmag_verdict(cert, cp, basic_density_bound(Q));
      }
    } else if (req.name == "eqn:ZDE_nonexceptional") {
      detail::require_complete(corpus, Q, std::min(Q, corpus_t));
      if (Q > corpus_t)
        throw std::runtime_error(
            "verify_against_zeros: density count needs |gamma| <= Q but corpus "
            "is certified only to " + std::to_string(corpus_t));
      cert.inputs.emplace_back("sigma", req.sigma);
      logmag bnd = nonexceptional_bound(req.sigma, Q);
      auto cp = detail::count_records(corpus, Q, [&](const zero_record& rec) {
        auto [gp, gc] = detail::in_height_window(rec, Q);
        return std::pair<bool, bool>{gp && rec.beta.hi >= req.sigma,
                                     gc && rec.beta.lo >= req.sigma};
      });
      detail::set_logmag_verdict(cert, cp, bnd);
    } else if (req.name == "thm:GZFR" || req.name == "lem:ZFR") {
      detail::require_complete(corpus, Q, T);
      cert.inputs.emplace_back("T", T);
      auto cp = detail::count_records(corpus, Q, [&](const zero_record& rec) {
        auto [gp, gc] = detail::in_height_window(rec, T);
        interval b = zfr_boundary(Q, rec.gamma);
        return std::pair<bool, bool>{gp && rec.beta.hi >= b.lo,
                                     gc && rec.beta.lo >= b.hi};
      });
      detail::set_allowance_verdict(cert, cp, 1);
      cert.notes = "one real simple exception permitted; checked for |gamma| <= " +
                   std::to_string(T);
    } else if (req.name == "cor:Page") {
      detail::require_complete(corpus, Q, T);
      interval b = 1.0 - page_constant() / log(interval(Q));
      auto cp = detail::count_records(corpus, Q, [&](const zero_record& rec) {
        bool real_poss = rec.gamma.lo <= 0 && rec.gamma.hi >= 0;
        return std::pair<bool, bool>{real_poss && rec.beta.hi >= b.lo,
                                     real_poss && rec.beta.lo >= b.hi};
      });
      detail::set_allowance_verdict(cert, cp, 1);
      cert.notes = "real zeros of quadratic characters only; one exception permitted";
    } else if (req.name == "lem:Landau") {
      detail::require_complete(corpus, Q, T);
      // candidate real zeros; a violation needs two of them at distinct
      // characters with min conductor > 400000 both right of the pair line
      struct cand { long long q; long long index; interval beta; };
      std::vector<cand> cands;
      for (const zero_list& zl : corpus) {
        if (zl.id.q > Q) continue;
        for (const zero_record& rec : zl.records)
          if (rec.gamma.lo <= 0 && rec.gamma.hi >= 0)
            cands.push_back({zl.id.q, zl.id.index, rec.beta});
      }
      detail::count_pair cp;
      for (size_t i = 0; i < cands.size(); ++i)
        for (size_t j = i + 1; j < cands.size(); ++j) {
          if (cands[i].q == cands[j].q && cands[i].index == cands[j].index) continue;
          if (std::min(cands[i].q, cands[j].q) <= 400000) continue;
          interval b = landau_pair_bound(cands[i].q, cands[j].q);
          bool poss = cands[i].beta.hi >= b.lo && cands[j].beta.hi >= b.lo;
          bool cert_in = cands[i].beta.lo >= b.hi && cands[j].beta.lo >= b.hi;
          if (poss) ++cp.possible;
          if (cert_in) ++cp.certain;
        }
      detail::set_allowance_verdict(cert, cp, 0);
      if (corpus_q <= 400000)
        cert.notes = "all conductors <= 400000: no real zeros at all at this "
                     "scale (prior verification); pair bound not engaged";
    } else if (req.name == "thm:DH") {
      detail::require_complete(corpus, Q, T);
      cert.inputs.emplace_back("T", T);
      if (Q <= 400000) {
        detail::mark_not_applicable(cert, "statement needs Q > 400000");
      } else if (!req.beta1_gap) {
        detail::mark_not_applicable(cert, "no exceptional gap supplied");
      } else {
        cert.inputs.emplace_back("beta1_gap", *req.beta1_gap);
        dh_result dh = dh_repulsion(Q, T, *req.beta1_gap);
        if (!dh.applicable || dh.vacuous) {
          detail::mark_not_applicable(cert, dh.note);
        } else {
          interval b = *dh.sigma_bound;
          auto cp = detail::count_records(corpus, Q, [&](const zero_record& rec) {
            auto [gp, gc] = detail::in_height_window(rec, T);
            bool right_poss = rec.beta.hi > 0.5 && rec.beta.hi >= b.lo;
            bool right_cert = rec.beta.lo > 0.5 && rec.beta.lo >= b.hi;
            return std::pair<bool, bool>{gp && right_poss, gc && right_cert};
          });
          detail::set_allowance_verdict(cert, cp, 0);
          cert.notes = "threshold " + std::to_string(b.lo) + "..";
        }
      }
    } else if (req.name == "eqn:DH_Lower") {
      cert.inputs.emplace_back("sigma", req.sigma);
      if (Q <= 400000) {
        detail::mark_not_applicable(cert, "derivation needs Q > 400000");
      } else if (!req.beta1_gap) {
        detail::mark_not_applicable(cert, "no exceptional gap supplied");
      } else {
        cert.inputs.emplace_back("beta1_gap", *req.beta1_gap);
        cert.bound = dh_lower_bound(Q, req.sigma, *req.beta1_gap);
        cert.observed = logmag::from_integer(1);
        // lower-bound direction: holds when 1 sits below the evaluated value
        int c = logmag::compare(*cert.observed, cert.bound);
        cert.verdict = c < 0 ? verdict_t::holds
                             : (c > 0 ? verdict_t::violated : verdict_t::inconclusive);
        cert.notes = "lower-bound form: value must be >= 1 in the exceptional range";
      }
    } else if (req.name == "lem:Linnik" || req.name == "cor:Linnik_lemma" ||
               req.name == "prop:HB_zero-count" ||
               req.name == "prop:HB_zero-count.alt") {
      const zero_list* zl = detail::find_list(corpus, req.q, req.char_index);
      if (!zl)
        throw std::runtime_error("verify_against_zeros: no list for modulus " +
                                 std::to_string(req.q) + " character " +
                                 std::to_string(req.char_index));
      if (std::abs(req.t) + req.r > zl->complete_to)
        throw std::runtime_error(
            "verify_against_zeros: disc exceeds certified height for modulus " +
            std::to_string(req.q));
      double Td = req.T > 0 ? req.T : zl->complete_to;
      if (std::abs(req.t) > Td)
        throw std::runtime_error("verify_against_zeros: disc center above T");
      cert.inputs = {{"q", static_cast<double>(req.q)},
                     {"char_index", static_cast<double>(req.char_index)},
                     {"r", req.r},
                     {"t", req.t},
                     {"T", Td}};
      if (req.name == "lem:Linnik" || req.name == "cor:Linnik_lemma") {
        interval bnd;
        if (req.name == "lem:Linnik") {
          bnd = lemma29_bound(req.r, static_cast<double>(req.q), Td);
        } else {
          if (!(std::max(Q, Td) > 1e4)) {
            detail::mark_not_applicable(cert, "statement needs max{Q, T} > 10^4");
            out.push_back(std::move(cert));
            continue;
          }
          cert.inputs.emplace_back("Q", Q);
          bnd = cor212_bound(req.r, Q, Td);
        }
        std::vector<dirichlet_character> chars = enumerate_primitive(req.q);
        const dirichlet_character* chi = nullptr;
        for (const auto& c : chars)
          if (c.index == req.char_index) chi = &c;
        if (!chi)
          throw std::runtime_error("verify_against_zeros: bad character index");
        disc_count_result dc =
            disc_count(*chi, interval(req.r), cbox::point(1.0, req.t), *zl);
        detail::count_pair cp{dc.count - dc.boundary_flagged, dc.count};
        detail::set_interval_verdict(cert, cp, bnd);
      } else {
        bool alt = req.name == "prop:HB_zero-count.alt";
        if (req.q == 1 && std::abs(req.t) < 3e12) {
          detail::mark_not_applicable(
              cert, "trivial character needs |t| >= 3e12");
          out.push_back(std::move(cert));
          continue;
        }
        interval bnd = prop211_bound(req.r, static_cast<double>(req.q), Td, alt);
        cert.bound = logmag::from_interval(bnd);
        interval sum(0.0);
        long long poss = 0, certain = 0;
        for (const zero_record& rec : zl->records) {
          interval dx = 1.0 - rec.beta;
          interval dy = interval(req.t) - rec.gamma;
          interval dist2 = dx * dx + dy * dy;
          double r2 = req.r * req.r;
          bool p = dist2.lo <= r2, ci = dist2.hi <= r2;
          if (!p) continue;
          ++poss;
          if (ci) ++certain;
          interval re = dx + interval(req.r);
          sum = sum + re / (re * re + dy * dy);
        }
        if (poss == 0) {
          cert.observed_count = 0;
          cert.verdict = verdict_t::holds;
        } else {
          cert.observed_count = poss;
          if (sum.hi < bnd.lo) cert.verdict = verdict_t::holds;
          else if (certain == poss && sum.lo > bnd.hi)
            cert.verdict = verdict_t::violated;
          else cert.verdict = verdict_t::inconclusive;
        }
        cert.notes = alt
            ? "constant 4.7908 as displayed in the downstream proof; the "
              "statement has 4.7098"
            : "statement constant 4.7098; the downstream proof displays "
              "4.7908; both evaluators provided";
      }
    } else {
      throw std::invalid_argument("verify_against_zeros: unknown certificate " +
                                  req.name);
    }
    out.push_back(std::move(cert));
  }
  return out;
}

// canonical battery for a corpus certified complete for q <= Q, |gamma| <= T
inline std::vector<certificate_request> standard_requests(
    double Q, double T, const std::vector<zero_list>& corpus) {
  std::vector<certificate_request> reqs;
  for (double s : {39.0 / 40.0, 0.98, 1.0}) {
    reqs.push_back({.name = "thm:GLFZDE.N", .sigma = s, .Q = Q});
    reqs.push_back({.name = "thm:GLFZDE.Nstar", .sigma = s, .Q = Q});
  }
  for (double s : {0.0, 0.5, 0.975}) {
    reqs.push_back({.name = "cor:GLFZDE.N", .sigma = s, .Q = Q});
    reqs.push_back({.name = "cor:GLFZDE.Nstar", .sigma = s, .Q = Q});
  }
  reqs.push_back({.name = "lem:basic_density", .Q = Q});
  for (double s : {0.98, 1.0})
    reqs.push_back({.name = "eqn:ZDE_nonexceptional", .sigma = s, .Q = Q});
  reqs.push_back({.name = "thm:GZFR", .Q = Q, .T = T});
  reqs.push_back({.name = "cor:Page", .Q = Q, .T = T});
  reqs.push_back({.name = "lem:Landau", .Q = Q, .T = T});
  reqs.push_back({.name = "thm:DH", .Q = Q, .T = T, .beta1_gap = 1e-10});
  reqs.push_back(
      {.name = "eqn:DH_Lower", .sigma = 0.995, .Q = Q, .beta1_gap = 1e-10});
  // disc checks anchored at 0 and at each character's first ordinate
  for (const zero_list& zl : corpus) {
    std::vector<double> centers{0.0};
    if (!zl.records.empty()) centers.push_back(zl.records.back().gamma.lo);
    for (double t : centers) {
      for (double r : {0.75, 1.0})
        if (std::abs(t) + r <= zl.complete_to)
          reqs.push_back({.name = "lem:Linnik", .r = r, .t = t, .q = zl.id.q,
                          .char_index = zl.id.index});
      for (const char* nm : {"prop:HB_zero-count", "prop:HB_zero-count.alt"})
        if (std::abs(t) + 0.3 <= zl.complete_to)
          reqs.push_back({.name = nm, .r = 0.3, .t = t, .q = zl.id.q,
                          .char_index = zl.id.index});
      if (std::abs(t) + 0.1 <= zl.complete_to)
        reqs.push_back({.name = "cor:Linnik_lemma", .Q = Q, .r = 0.1, .t = t,
                        .q = zl.id.q, .char_index = zl.id.index});
    }
  }
  return reqs;
}

} // namespace zdv

#endif
