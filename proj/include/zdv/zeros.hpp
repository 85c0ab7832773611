#ifndef ZDV_ZEROS_HPP
#define ZDV_ZEROS_HPP

// Rigorous zero counting and localization for Dirichlet L-functions at small
// conductor and height.
//
// Rectangle counts come from the argument principle: the change of
// arg Lambda(s, chi) is accumulated around [sigma0, 1.5] x [-T, T], each edge
// subdivided adaptively until the enclosure of Lambda over a segment excludes
// zero and spans an argument sector narrower than pi/4.  The increment across
// such a segment equals the principal argument of the ratio of the endpoint
// values, because the continuous argument cannot leave the sector.  If a
// segment keeps touching zero down to the minimal length, the height T is
// perturbed by at most 1e-3 and the contour retried.
//
// Critical-line lists come from sign changes of the rotated completed
// function Z(t) = Re(e^{-i phi} Lambda(1/2 + it, chi)) with e^{2 i phi} the
// root number (phi fixed up to a global sign flip, which cannot affect sign
// changes).  Brackets found on a double-precision exploration grid are
// narrowed by bisection and then certified by interval sign evaluations at
// the final endpoints, so each reported gamma enclosure rigorously contains a
// zero.  A list is accepted only if it matches the rectangle count; any
// discrepancy is reported, never silently absorbed.
//
// All characters of one modulus are scanned together: the Hurwitz splits
// behind L(s, chi) do not depend on chi, so one evaluation point serves the
// entire batch.  Scans over disjoint height windows could run concurrently
// and be merged by the same gamma ordering used here; this build is
// single-threaded.

#include "zdv/lfunctions.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zdv {

enum class localization_method { argument_principle, sign_change };

inline const char* to_string(localization_method m) {
  return m == localization_method::argument_principle ? "argument_principle"
                                                       : "sign_change";
}

struct character_id {
  long long q = 1;
  long long index = 0;
  bool operator==(const character_id& o) const { return q == o.q && index == o.index; }
};

struct zero_record {
  character_id id;
  interval beta{0.0};
  interval gamma{0.0};
  bool on_critical_line = false;
  localization_method method = localization_method::sign_change;
};

struct rectangle_count {
  character_id id;
  double sigma0 = 0.0;
  double height = 0.0;      // T after any boundary perturbation (|shift| <= 1e-3)
  long long count = 0;
  interval winding_residual{0.0};  // full change of arg Lambda, radians

  // winding_residual / 2 pi minus the integer count; |.| <= 0.25 on acceptance
  interval normalized_residual() const {
    interval two_pi = interval(2.0) * consts::pi<double>();
    return winding_residual / two_pi - interval::from_integer(count);
  }
};

// sign-change list for one character, complete for |gamma| <= complete_to
struct zero_list {
  character_id id;
  double complete_to = 0.0;
  std::vector<zero_record> records;
};

struct disc_count_result {
  long long count = 0;
  long long boundary_flagged = 0;  // straddlers, included in count
};

namespace detail {

struct boundary_zero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace detail

// Batched zero scanner for the primitive characters of one modulus.
class zero_scanner {
 public:
  zero_scanner(std::vector<dirichlet_character> chars, long long terms = 64,
               int correction_order = 12)
      : terms_(terms), corr_(correction_order) {
    if (chars.empty())
      throw std::invalid_argument("zero_scanner: no characters");
    q_ = chars[0].q;
    std::map<long long, dirichlet_character> by_index;  // conjugation-closed
    for (auto& c : chars) {
      if (c.q != q_) throw std::invalid_argument("zero_scanner: mixed moduli");
      if (!c.primitive)
        throw std::invalid_argument("zero_scanner: characters must be primitive");
      dirichlet_character cj = c.conjugate();
      by_index.emplace(c.index, std::move(c));
      by_index.emplace(cj.index, std::move(cj));
    }
    for (auto& kv : by_index) chars_.push_back(std::move(kv.second));
    for (size_t i = 0; i < chars_.size(); ++i) {
      long long ci = chars_[i].conjugate().index;
      size_t j = 0;
      while (chars_[j].index != ci) ++j;
      conj_pos_.push_back(j);
      if (chars_[i].parity == 0) has_even_ = true; else has_odd_ = true;
    }
    static const interval ln_pi =
        interval::from_literal("1.144729885849400174143427351353058711647");
    lnqpi_ = log(interval::from_integer(q_)) - ln_pi;
    lnqpi_d_ = std::log(double(q_)) - 1.1447298858494002;
    if (q_ >= 3) batch_.emplace(chars_, terms_, corr_);
    for (const auto& c : chars_) {
      cbox eps = root_number(c);
      eps_.push_back(eps);
      interval phi;
      if (auto a = eps.arg()) {
        phi = *a * interval(0.5);
      } else {
        auto b = (-eps).arg();
        if (!b) throw std::runtime_error("root number enclosure touches zero");
        phi = (*b + consts::pi<double>()) * interval(0.5);
      }
      rot_.push_back(cbox(cos(phi), -sin(phi)));
      rot_d_.push_back(std::polar(1.0, -0.5 * (phi.lo + phi.hi)));
    }
  }

  explicit zero_scanner(long long q, long long terms = 64, int correction_order = 12)
      : zero_scanner(
            [&] {
              std::vector<dirichlet_character> p = enumerate_primitive(q);
              if (p.empty())
                throw std::invalid_argument(
                    "zero_scanner: no primitive characters for this modulus");
              return p;
            }(),
            terms, correction_order) {}

  long long q() const { return q_; }
  const std::vector<dirichlet_character>& characters() const { return chars_; }
  size_t position(long long index) const {
    for (size_t i = 0; i < chars_.size(); ++i)
      if (chars_[i].index == index) return i;
    throw std::invalid_argument("zero_scanner: character not in batch");
  }

  // Lambda(s, chi) for every character in the batch; even characters are
  // evaluated through the functional equation when Re s < 1/4 so the
  // Gamma(s/2) pole at s = 0 never enters
  std::vector<cbox> lambda(const cbox& s) const {
    return lambda_with(s, batch_ ? &*batch_ : nullptr, terms_, corr_);
  }

  // Z(t) per character; the rotated value is provably real, so the imaginary
  // enclosure must contain zero or the rotation bookkeeping is broken
  std::vector<interval> z_values(const interval& t) const {
    std::vector<cbox> lam = lambda(cbox(interval(0.5), t));
    std::vector<interval> out(chars_.size());
    for (size_t i = 0; i < chars_.size(); ++i) {
      cbox zv = rot_[i] * lam[i];
      if (!zv.im.contains(0.0))
        throw std::logic_error("rotated completed value lost reality");
      out[i] = zv.re;
    }
    return out;
  }

  // double-precision exploration values; not rigorous
  std::vector<double> z_approx(double t) const {
    std::complex<double> s(0.5, t);
    std::vector<std::complex<double>> lam(chars_.size());
    if (q_ == 1) {
      em_split_approx em = hurwitz_parts_approx(s, 1.0, terms_, corr_);
      // (s - 1) zeta(s); the split leaves the pole term 1/(s - 1) implicit
      std::complex<double> reg = (s - 1.0) * (em.finite + em.pole_comp + em.rest) + 1.0;
      lam[0] = 2.0 * reg *
               std::exp(-(s * 0.5) * 1.1447298858494002 + lgamma_approx(s * 0.5 + 1.0));
    } else {
      lam = batch_->eval_approx(s);
      std::complex<double> e0 = 0.0, e1 = 0.0;
      if (has_even_) e0 = std::exp((s * 0.5) * lnqpi_d_ + lgamma_approx(s * 0.5));
      if (has_odd_)
        e1 = std::exp(((s + 1.0) * 0.5) * lnqpi_d_ + lgamma_approx((s + 1.0) * 0.5));
      for (size_t i = 0; i < chars_.size(); ++i)
        lam[i] *= chars_[i].parity ? e1 : e0;
    }
    std::vector<double> out(chars_.size());
    for (size_t i = 0; i < chars_.size(); ++i)
      out[i] = (rot_d_[i] * lam[i]).real();
    return out;
  }

  // argument-principle counts over [sigma0, 1.5] x [-T, T] for every
  // character in the batch; a shared boundary perturbation keeps the heights
  // identical across the batch
  std::vector<rectangle_count> count_rectangle(double sigma0, double T) const {
    if (!(T > 0.0)) throw std::invalid_argument("count_rectangle: T must be positive");
    if (!(sigma0 >= 0.0 && sigma0 < 1.0))
      throw std::invalid_argument("count_rectangle: sigma0 must lie in [0, 1)");
    static const double shifts[] = {0.0, 2.5e-4, -5.0e-4, 9.9e-4};
    std::string why;
    for (double d : shifts) {
      double th = T + d;
      std::vector<interval> wind;
      try {
        wind = winding(sigma0, th);
      } catch (const detail::boundary_zero& e) {
        why = e.what();
        continue;
      }
      interval two_pi = interval(2.0) * consts::pi<double>();
      std::vector<rectangle_count> out;
      for (size_t i = 0; i < chars_.size(); ++i) {
        interval w = wind[i] / two_pi;
        long long n = (long long)std::llround(0.5 * (w.lo + w.hi));
        interval resid = w - interval::from_integer(n);
        if (resid.mag() > 0.25)
          throw std::runtime_error(
              "winding enclosure undecidable; raise terms/correction_order");
        if (n < 0)
          throw std::runtime_error("negative winding; evaluation inconsistent");
        out.push_back({{q_, chars_[i].index}, sigma0, th, n, wind[i]});
      }
      return out;
    }
    throw std::runtime_error(
        "rectangle boundary cannot avoid a zero enclosure within 1e-3: " + why);
  }

  // sign-change scan over [0, T] with conjugate reflection for the negative
  // ordinates, cross-checked against the rectangle count
  std::vector<zero_list> critical_zeros(double T) const {
    std::vector<rectangle_count> rect = count_rectangle(0.0, T);
    double th = rect[0].height;
    std::string mismatch;
    for (double h : {1.0 / 64, 1.0 / 256}) {
      std::vector<std::vector<interval>> pos(chars_.size());
      bool ok = true;
      mismatch.clear();
      scan_positive(th, h, pos);
      for (size_t i = 0; i < chars_.size() && ok; ++i) {
        long long total =
            (long long)pos[i].size() + (long long)pos[conj_pos_[i]].size();
        if (total != rect[i].count) {
          mismatch = "possible off-line zero or missed zero: modulus " +
                     std::to_string(q_) + " character index " +
                     std::to_string(chars_[i].index) + ": " +
                     std::to_string(total) + " sign changes vs rectangle count " +
                     std::to_string(rect[i].count);
          ok = false;
        }
      }
      if (!ok) continue;
      std::vector<zero_list> out(chars_.size());
      for (size_t i = 0; i < chars_.size(); ++i) {
        out[i].id = {q_, chars_[i].index};
        out[i].complete_to = th;
        for (const interval& g : pos[conj_pos_[i]])
          out[i].records.push_back({{q_, chars_[i].index}, interval(0.5),
                                    interval(-g.hi, -g.lo), true,
                                    localization_method::sign_change});
        for (const interval& g : pos[i])
          out[i].records.push_back({{q_, chars_[i].index}, interval(0.5), g, true,
                                    localization_method::sign_change});
        std::sort(out[i].records.begin(), out[i].records.end(),
                  [](const zero_record& a, const zero_record& b) {
                    if (a.gamma.lo != b.gamma.lo) return a.gamma.lo < b.gamma.lo;
                    return a.gamma.hi < b.gamma.hi;
                  });
      }
      return out;
    }
    throw std::runtime_error(mismatch);
  }

 private:
  cbox archimedean(const cbox& s, int a) const {
    cbox w = (s + cbox(interval::from_integer(a), interval(0.0))) * interval(0.5);
    return exp(w * cbox(lnqpi_, interval(0.0)) + lgamma_cbox(w));
  }

  std::vector<cbox> lambda_with(const cbox& s, const l_batch* b, long long terms,
                                int corr) const {
    std::vector<cbox> out(chars_.size());
    if (q_ == 1) {
      out[0] = completed_lambda(chars_[0], s, terms, corr);
      return out;
    }
    cbox one(interval(1.0), interval(0.0));
    bool reflect = s.re.hi < 0.25 && has_even_;
    std::vector<cbox> direct, refl;
    cbox e0, e1, er;
    if (has_odd_ || !reflect) {
      direct = b->eval(s);
      if (has_odd_) e1 = archimedean(s, 1);
      if (has_even_ && !reflect) e0 = archimedean(s, 0);
    }
    if (reflect) {
      refl = b->eval(one - s);
      er = archimedean(one - s, 0);
    }
    for (size_t i = 0; i < chars_.size(); ++i) {
      if (chars_[i].parity == 1) out[i] = e1 * direct[i];
      else if (!reflect) out[i] = e0 * direct[i];
      else out[i] = eps_[i] * er * refl[conj_pos_[i]];
    }
    return out;
  }

  // total change of arg Lambda around [sigma0, 1.5] x [-T, T], per character
  std::vector<interval> winding(double sigma0, double T) const {
    static const double sigma_right = 1.5;
    const size_t n = chars_.size();
    // contour enclosures only gate the sector test, so a short series is
    // enough; it also keeps the box dependency width down
    long long terms_c = std::max<long long>(16, (long long)std::ceil(0.4 * T));
    int corr_c = 6;
    std::optional<l_batch> batch_c;
    if (q_ >= 3) batch_c.emplace(chars_, terms_c, corr_c);
    const l_batch* bc = batch_c ? &*batch_c : nullptr;
    std::map<std::pair<double, double>, std::vector<cbox>> cache;
    auto point_vals = [&](double x, double y) -> const std::vector<cbox>& {
      auto key = std::make_pair(x, y);
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, lambda_with(cbox::point(x, y), bc, terms_c, corr_c))
                 .first;
      return it->second;
    };
    // the image of a committed segment stays inside a sector of width < pi,
    // so the principal argument of the endpoint ratio is the true increment;
    // 2.8 leaves margin for the endpoint boxes' own width
    const double max_sector = 2.8;

    // increments for one segment, or nothing if it has to be split
    auto try_segment = [&](double x0, double y0, double x1, double y1)
        -> std::optional<std::vector<interval>> {
      cbox box(interval(std::min(x0, x1), std::max(x0, x1)),
               interval(std::min(y0, y1), std::max(y0, y1)));
      std::vector<cbox> vals = lambda_with(box, bc, terms_c, corr_c);
      for (const cbox& v : vals) {
        double cr = 0.5 * (v.re.lo + v.re.hi), ci = 0.5 * (v.im.lo + v.im.hi);
        cbox c = v * cbox::point(cr, -ci);  // recentered: sector around 0
        auto aw = atan2_box(c.im, c.re);
        if (!aw || aw->hi - aw->lo >= max_sector) return std::nullopt;
      }
      const std::vector<cbox>& va = point_vals(x0, y0);
      const std::vector<cbox>& vb = point_vals(x1, y1);
      std::vector<interval> inc;
      inc.reserve(n);
      for (size_t i = 0; i < n; ++i) {
        cbox w = vb[i] * va[i].conj();
        auto d = atan2_box(w.im, w.re);
        if (!d) return std::nullopt;
        inc.push_back(*d);
      }
      return inc;
    };

    struct seg { double x0, y0, x1, y1; int depth; };
    std::vector<seg> todo;
    auto add_edge = [&](double x0, double y0, double x1, double y1, double step) {
      double len = std::hypot(x1 - x0, y1 - y0);
      int m = std::max(1, (int)std::ceil(len / step));
      for (int j = 0; j < m; ++j) {
        double u0 = double(j) / m, u1 = double(j + 1) / m;
        todo.push_back({x0 + (x1 - x0) * u0, y0 + (y1 - y0) * u0,
                        x0 + (x1 - x0) * u1, y0 + (y1 - y0) * u1, 0});
      }
    };
    add_edge(sigma0, -T, sigma_right, -T, 0.125);
    add_edge(sigma_right, -T, sigma_right, T, 0.25);
    add_edge(sigma_right, T, sigma0, T, 0.125);
    add_edge(sigma0, T, sigma0, -T, 0.25);

    std::vector<interval> sum(n, interval(0.0));
    while (!todo.empty()) {
      seg g = todo.back();
      todo.pop_back();
      if (auto inc = try_segment(g.x0, g.y0, g.x1, g.y1)) {
        for (size_t i = 0; i < n; ++i) sum[i] += (*inc)[i];
        continue;
      }
      double len = std::max(std::abs(g.x1 - g.x0), std::abs(g.y1 - g.y0));
      if (len < 1e-6 || g.depth > 40)
        throw detail::boundary_zero("zero enclosure on the contour near (" +
                                    std::to_string(0.5 * (g.x0 + g.x1)) + ", " +
                                    std::to_string(0.5 * (g.y0 + g.y1)) + ")");
      double xm = 0.5 * (g.x0 + g.x1), ym = 0.5 * (g.y0 + g.y1);
      todo.push_back({g.x0, g.y0, xm, ym, g.depth + 1});
      todo.push_back({xm, ym, g.x1, g.y1, g.depth + 1});
    }
    return sum;
  }

  // certified positive-ordinate enclosures per character for t in (0, th]
  void scan_positive(double th, double h,
                     std::vector<std::vector<interval>>& pos) const {
    const size_t n = chars_.size();
    std::vector<double> ts;
    for (long long j = 0; j * h < th; ++j) ts.push_back(j * h);
    ts.push_back(th);
    std::vector<std::vector<std::pair<double, double>>> brackets(n);
    std::vector<double> prev = z_approx(ts[0]);
    for (size_t j = 1; j < ts.size(); ++j) {
      std::vector<double> cur = z_approx(ts[j]);
      for (size_t i = 0; i < n; ++i)
        if ((prev[i] < 0.0) != (cur[i] < 0.0))
          brackets[i].push_back({ts[j - 1], ts[j]});
      prev.swap(cur);
    }
    for (size_t i = 0; i < n; ++i) {
      for (auto [a, b] : brackets[i]) {
        double za = z_approx(a)[i];
        while (b - a > 1e-6) {
          double m = a + 0.5 * (b - a);
          double zm = z_approx(m)[i];
          if (zm == 0.0) {
            m = a + 0.53125 * (b - a);
            zm = z_approx(m)[i];
            if (zm == 0.0) break;
          }
          if ((zm < 0.0) == (za < 0.0)) { a = m; za = zm; } else { b = m; }
        }
        if (auto g = certify_bracket(a, b, i)) pos[i].push_back(*g);
      }
    }
  }

  // interval sign certification with two widening retries; empty on failure
  // (a dropped bracket surfaces later as a rectangle-count mismatch)
  std::optional<interval> certify_bracket(double a, double b, size_t i) const {
    for (int round = 0; round < 3; ++round) {
      interval za = z_values(interval(a))[i];
      interval zb = z_values(interval(b))[i];
      int sa = za.lo > 0.0 ? 1 : (za.hi < 0.0 ? -1 : 0);
      int sb = zb.lo > 0.0 ? 1 : (zb.hi < 0.0 ? -1 : 0);
      if (sa != 0 && sb != 0) {
        if (sa == sb) return std::nullopt;  // no certified change left
        return interval(a, b);
      }
      double w = 8.0 * std::pow(8.0, round) * (b - a);
      if (sa == 0) a = std::max(0.0, a - w);
      if (sb == 0) b = b + w;
    }
    return std::nullopt;
  }

  long long q_ = 1;
  long long terms_;
  int corr_;
  std::vector<dirichlet_character> chars_;
  std::vector<size_t> conj_pos_;
  bool has_even_ = false, has_odd_ = false;
  interval lnqpi_{0.0};
  double lnqpi_d_ = 0.0;
  std::optional<l_batch> batch_;
  std::vector<cbox> eps_;
  std::vector<cbox> rot_;
  std::vector<std::complex<double>> rot_d_;
};

// single-character entry points

inline rectangle_count count_zeros_rectangle(const dirichlet_character& chi,
                                             double sigma0, double T,
                                             long long terms = 64,
                                             int correction_order = 12) {
  zero_scanner sc(std::vector<dirichlet_character>{chi}, terms, correction_order);
  return sc.count_rectangle(sigma0, T)[sc.position(chi.index)];
}

inline std::vector<zero_record> find_critical_zeros(const dirichlet_character& chi,
                                                    double T, long long terms = 64,
                                                    int correction_order = 12) {
  if (chi.q > 100 || !(T > 0.0) || T > 100.0)
    throw std::invalid_argument("find_critical_zeros: desk scale is q <= 100, T <= 100");
  zero_scanner sc(std::vector<dirichlet_character>{chi}, terms, correction_order);
  return sc.critical_zeros(T)[sc.position(chi.index)].records;
}

// number of listed zeros in the closed disc |center - rho| <= r; enclosures
// that straddle the circle are counted in and flagged
inline disc_count_result disc_count(const dirichlet_character& chi, const interval& r,
                                    const cbox& center, const zero_list& zl) {
  if (!(zl.id == character_id{chi.q, chi.index}))
    throw std::invalid_argument("disc_count: zero list belongs to a different character");
  if ((interval(center.im.mag()) + r).hi > zl.complete_to)
    throw std::invalid_argument("disc_count: zero list incomplete for the requested disc");
  disc_count_result res;
  for (const zero_record& rec : zl.records) {
    interval dist = (center - cbox(rec.beta, rec.gamma)).abs();
    if (dist.lo > r.hi) continue;
    ++res.count;
    if (!(dist.hi <= r.lo)) ++res.boundary_flagged;
  }
  return res;
}

inline disc_count_result disc_count(const dirichlet_character& chi, double r,
                                    const cbox& center, const zero_list& zl) {
  return disc_count(chi, interval(r), center, zl);
}

// main term and error budget for the zero count up to height T; the computed
// rectangle count must land in [main - err, main + err]
struct count_window {
  interval main{0.0};
  interval error_budget{0.0};
};

inline count_window rvm_count_window(const dirichlet_character& chi, double T) {
  if (!chi.primitive)
    throw std::invalid_argument("rvm_count_window: character must be primitive");
  bool trivial = chi.q == 1;
  if (trivial && !(T > 14.0))
    throw std::domain_error("rvm_count_window: need T > 14 for the trivial character");
  if (!trivial && !(T >= 5.0 / 7.0))
    throw std::domain_error("rvm_count_window: need T >= 5/7");
  interval t(T);
  interval lt = log(t);
  interval lqt = log(interval::from_integer(chi.q)) + lt;
  interval main = t / consts::pi<double>() *
                  (lqt - log(interval(2.0) * consts::pi<double>()) - interval(1.0));
  interval err;
  if (trivial) {
    err = interval::from_literal("0.137") * lt +
          interval::from_literal("0.443") * log(lt) +
          interval::from_literal("2.463");
  } else {
    interval e1 = interval::from_literal("0.247") * lqt + interval::from_literal("6.894");
    interval e2 = interval::from_literal("0.298") * lqt + interval::from_literal("4.358");
    err = interval(std::min(e1.lo, e2.lo), std::min(e1.hi, e2.hi));
  }
  return {main, err};
}

// JSON lines export/import; doubles survive the round trip exactly

inline void write_zero_records(std::ostream& os, const std::vector<zero_record>& recs) {
  for (const zero_record& r : recs) {
    nlohmann::ordered_json j;
    j["q"] = r.id.q;
    j["char_index"] = r.id.index;
    j["beta_lo"] = r.beta.lo;
    j["beta_hi"] = r.beta.hi;
    j["gamma_lo"] = r.gamma.lo;
    j["gamma_hi"] = r.gamma.hi;
    j["method"] = to_string(r.method);
    os << j.dump() << '\n';
  }
}

inline std::vector<zero_record> read_zero_records(std::istream& is) {
  std::vector<zero_record> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    zero_record r;
    r.id = {j.at("q").get<long long>(), j.at("char_index").get<long long>()};
    r.beta = interval(j.at("beta_lo").get<double>(), j.at("beta_hi").get<double>());
    r.gamma = interval(j.at("gamma_lo").get<double>(), j.at("gamma_hi").get<double>());
    if (!(r.beta.lo >= 0.0 && r.beta.hi <= 1.0))
      throw std::runtime_error("zero record outside the critical strip");
    std::string m = j.at("method").get<std::string>();
    if (m == "argument_principle") r.method = localization_method::argument_principle;
    else if (m == "sign_change") r.method = localization_method::sign_change;
    else throw std::runtime_error("unknown localization method: " + m);
    r.on_critical_line = r.beta.lo == 0.5 && r.beta.hi == 0.5;
    out.push_back(r);
  }
  return out;
}

} // namespace zdv

#endif
