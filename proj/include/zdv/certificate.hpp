#ifndef ZDV_CERTIFICATE_HPP
#define ZDV_CERTIFICATE_HPP

// One evaluated inequality: a named bound, what was observed against it, and
// a three-way verdict.  "holds" and "violated" both require strict interval
// separation; anything overlapping is "inconclusive" so a verdict is never a
// false pass.  Serialized shape: {name, inputs, bound_log10, observed,
// verdict, notes}.

#include "zdv/logmag.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace zdv {

enum class verdict_t { holds, inconclusive, violated };

inline const char* to_string(verdict_t v) {
  switch (v) {
    case verdict_t::holds: return "holds";
    case verdict_t::violated: return "violated";
    default: return "inconclusive";
  }
}

struct bound_certificate {
  std::string name;
  std::vector<std::pair<std::string, double>> inputs;  // insertion-ordered
  logmag bound;
  std::optional<logmag> observed;           // magnitude form, or
  std::optional<long long> observed_count;  // plain integer form, or absent
  verdict_t verdict = verdict_t::inconclusive;
  std::string notes;

  void set_verdict_from_comparison() {
    // observed <= bound with separation -> holds; the reverse -> violated
    std::optional<logmag> obs = observed;
    if (!obs && observed_count)
      obs = logmag::from_integer(*observed_count);
    if (!obs) { verdict = verdict_t::inconclusive; return; }
    int c = logmag::compare(*obs, bound);
    if (c < 0) verdict = verdict_t::holds;
    else if (c > 0) verdict = verdict_t::violated;
    else verdict = verdict_t::inconclusive;
  }
};

// evaluates observed-vs-bound where both sides are plain intervals
inline verdict_t compare_intervals(const interval& observed, const interval& bound) {
  if (observed.hi < bound.lo) return verdict_t::holds;
  if (observed.lo > bound.hi) return verdict_t::violated;
  return verdict_t::inconclusive;
}

} // namespace zdv

#endif
