#ifndef CCBP_GENERATORS_HPP
#define CCBP_GENERATORS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccbp/instance.hpp"
#include "ccbp/packing.hpp"

namespace ccbp {

// Families of adversarial instances. Each generator returns the instance,
// a feasible reference packing with a matching combinatorial lower bound,
// the exact cost the designated procedure must produce, and the ratio the
// family approaches as its parameters grow.
enum class ScenarioKind {
  poc_general,
  poc_parametric,
  batched,
  batched_halves,
  nf_lower,
  wf_lower,
  wf_k2_lower,
  beta04_lower,
  beta041_lower,
  ff_param_lower,
  vp_poc_lower,
};

// The measurement a scenario is built for: an online greedy, the sum of
// per-cluster optima, or the sum of per-batch optima.
enum class Procedure {
  next_fit,
  worst_fit,
  first_fit,
  first_fit_vector,
  clustered,
  batched,
};

std::string kind_name(ScenarioKind kind);
ScenarioKind parse_kind(const std::string& name);
std::string procedure_name(Procedure proc);
Procedure parse_procedure(const std::string& name);

struct ScenarioParams {
  int k = 0;
  int t = 0;
  int N = 0;
  int M = 0;
  int q = 0;
  int d = 1;
  std::optional<Rational> beta;
  std::optional<Rational> eps;
};

struct GeneratedScenario {
  ScenarioKind kind = ScenarioKind::poc_general;
  Procedure procedure = Procedure::clustered;
  ScenarioParams params;
  Instance instance;
  OptCertificate opt;            // reference packing + lower bound
  long long predicted_cost = 0;  // exact cost of the designated procedure
  Rational target_ratio;         // bound the family approaches
};

// Sequence plugged into the ff_param scenario behind its zero-size prefix.
// opt_bins lists, per reference bin, indices into sizes; ff_cost is the
// exact bin count the lowest-index greedy uses on the sizes alone (verified
// at generation time by simulation).
struct CoreSequence {
  std::vector<Rational> sizes;
  std::vector<std::vector<int>> opt_bins;
  long long ff_cost = 0;
};

using CorePlugin =
    std::function<CoreSequence(int k, int t, int N, const Rational& beta)>;

// Default ff_param core: N items of 1/(t+1) - t*delta followed by t*N items
// of 1/(t+1) + delta, with delta small enough that the greedy packs the
// first block t+1 per bin, lets only the final partial bin absorb big
// items, and otherwise packs big items t per bin.
CoreSequence mix_core(int k, int t, int N, const Rational& beta);

// Clustering overhead, arbitrary sizes. k >= 2, N > k; optional beta must
// have floor(1/beta) = 1 and N * (beta - 1/2) > 1. Ratio (4k-2-2/N)/(k+1).
GeneratedScenario gen_poc_general(int k, int N,
                                  std::optional<Rational> beta = std::nullopt);

// Clustering overhead, sizes <= beta with floor(1/beta) = t >= 2. For
// t < k requires N > k and N * (beta - 1/(t+1)) > 1; for t >= k any N >= 1.
GeneratedScenario gen_poc_parametric(int k, int t, int N,
                                     std::optional<Rational> beta = std::nullopt);

// Batch-respecting packing overhead: q = 2 gives ratio 2 - 1/k, q = 3
// gives 5/2 - 2/k, both exact at every N. k >= 2, 2k | N.
GeneratedScenario gen_batched(int k, int N, int q);

// k = 2 with q batches of a single item of size 1/2: ratio q / ceil(q/2).
GeneratedScenario gen_batched_halves(int q);

// Single-active-bin greedy lower bound, ratio (3k-2-3k/N+2/N)/k -> 3 - 2/k.
// k >= 2, k | N, N >= 4, eps < 1/(10N) (default: largest 1/2^m below it).
GeneratedScenario gen_nf_lower(int k, int N,
                               std::optional<Rational> eps = std::nullopt);

// Minimum-load greedy lower bound, ratio -> 3 - 3/k. k >= 3, k | N,
// N >= 2, eps < 1/(10N) (default: largest 1/2^m below it).
GeneratedScenario gen_wf_lower(int k, int N,
                               std::optional<Rational> eps = std::nullopt);

// Minimum-load greedy at k = 2: 2N pairs {2/5, 3/5}; ratio 3/2 exactly.
GeneratedScenario gen_wf_k2_lower(int N);

// Sizes <= 2/5: both the single-active-bin and the minimum-load greedy use
// the same bin count, approaching (8k-10)/(3k) times the optimum.
// k >= 4, k | N, M >= 1, 3^(2M) * eps < 1/100 (default: largest 1/2^m).
GeneratedScenario gen_beta04_lower(int k, int N, int M,
                                   std::optional<Rational> eps = std::nullopt);

// Sizes <= 41/100: the minimum-load greedy hits exactly (35k-45)/(13k)
// times the optimum, above the (8k-10)/(3k) bound that holds at 2/5.
// k >= 6, k | N.
GeneratedScenario gen_beta041_instance(int k, int N);

// Lowest-index greedy, sizes <= beta with floor(1/beta) = t: zero-size
// prefix plus a pluggable core. k > t >= 2, k | N. The reported cost is the
// honest greedy simulation; it stays below the 1 + (k-t)(t+1)/(kt) target.
GeneratedScenario gen_ff_param_lower(int k, int t, int N,
                                     const CorePlugin& core = {},
                                     std::optional<Rational> beta = std::nullopt);

// Vector instances (d components, k = dN): clustering overhead approaches
// 2d. d >= 1, N >= 3. With d = 1 the items are scalars of size 1/N.
GeneratedScenario gen_vp_poc_lower(int d, int N);

// Text form: the instance section followed by a "--- scenario" block with
// the parameters, prediction, target, certificate and reference bins.
std::string serialize_scenario(const GeneratedScenario& sc);
GeneratedScenario parse_scenario(const std::string& text);

}  // namespace ccbp

#endif
