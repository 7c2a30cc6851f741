#ifndef CCBP_ANALYSIS_HPP
#define CCBP_ANALYSIS_HPP

#include <string>
#include <vector>

#include "ccbp/instance.hpp"
#include "ccbp/packing.hpp"
#include "ccbp/rational.hpp"

namespace ccbp {

// One interval of a piecewise-linear map x -> slope*x + intercept. Interval
// endpoints carry explicit open/closed flags so adjacent pieces can meet
// without overlap (e.g. [0,1/2] followed by (1/2,1]).
struct WeightPiece {
  Rational lo, hi;
  bool lo_closed = true, hi_closed = true;
  Rational slope, intercept;

  bool contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
  }
};

// Exact piecewise-linear item weight. Evaluation outside the declared domain
// throws std::domain_error; the domain of a parametric family stops at the
// size cap the family assumes.
struct WeightFunction {
  std::string name;
  int k = 0;
  int t = 0;  // 0 when the family has no size-cap parameter
  std::vector<WeightPiece> pieces;
  Rational ceiling;      // max total weight of any feasible bin
  Rational floor_slack;  // additive loss in "total weight >= bins - slack"

  Rational operator()(const Rational& x) const;
};

// Weight families, keyed by the guarantee they certify:
//   "poc_general"  clustering overhead, arbitrary sizes      (k >= 2)
//   "poc_param"    clustering overhead, sizes <= 1/t         (k >= 2, t >= 1)
//   "nf"           single-active-bin greedy                  (k >= 2)
//   "wf"           lowest-load greedy                        (k >= 2)
//   "beta04"       greedy with sizes <= 2/5                  (k >= 4)
//   "wf_5_12"      lowest-load greedy, sizes <= 5/12         (k in {4,5})
//   "ff_param"     lowest-index greedy, sizes <= 1/t         (k >= t >= 2)
//   "batched_k2"   two-batch repacking, k = 2                (pass k = 2)
//   "batched_k3"   three-batch repacking, k = 3              (pass k = 3)
WeightFunction make_weight(const std::string& name, int k, int t = 0);

// The proven per-bin bound: every bin with total size <= 1 and at most k
// items (sizes inside the family's domain) has total weight <= this value.
Rational opt_ceiling(const WeightFunction& w);

struct WeightReport {
  Rational rho;          // ceiling used by the check
  Rational floor_slack;  // slack used by the check
  std::vector<Rational> per_bin;
  Rational total;
  bool pass = false;
  std::string detail;  // human-readable reason on failure, empty on pass
};

// Verifies total weight per bin <= rho for every bin of a valid packing.
WeightReport check_ceiling(const Instance& inst, const Packing& packing,
                           const WeightFunction& w);

// Verifies total weight over all items >= (number of bins) - slack.
WeightReport check_floor(const Instance& inst, const Packing& packing,
                         const WeightFunction& w);

}  // namespace ccbp

#endif
