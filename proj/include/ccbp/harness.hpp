#ifndef CCBP_HARNESS_HPP
#define CCBP_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccbp/generators.hpp"

namespace ccbp {

// One measurement: the designated (or an explicitly chosen compatible)
// procedure executed against a generated scenario, compared to the
// scenario's certified optimum and closed-form prediction.
struct RunReport {
  ScenarioKind kind = ScenarioKind::poc_general;
  Procedure procedure = Procedure::next_fit;
  ScenarioParams params;
  long long measured_cost = 0;
  long long opt_cost = 0;
  bool opt_exact = false;
  Rational ratio;  // measured_cost / opt_cost, exact
  Rational target_ratio;
  long long predicted_cost = 0;
  bool prediction_match = false;
  double wallclock_seconds = 0.0;
};

// Procedures that are meaningful for a scenario kind. Lower-bound scenarios
// accept exactly the greedy they were built against (both greedies for the
// sizes-below-2/5 family, whose prediction covers the two), clustering
// scenarios accept the clustered split, batch scenarios the batched split.
bool compatible(ScenarioKind kind, Procedure proc);

// Dispatch into the matching generator; fields the kind ignores are not
// read. Throws std::invalid_argument on bad parameters.
GeneratedScenario make_scenario(ScenarioKind kind, const ScenarioParams& params);

RunReport run(const GeneratedScenario& scenario, Procedure proc);
RunReport run(const GeneratedScenario& scenario);  // designated procedure

// One CSV row per grid point, in grid order, with the fixed column set
//   kind,k,t,beta,N,M,eps,d,q,procedure,measured,opt,opt_exact,
//   ratio_exact,ratio_dec,target_exact,predicted,match,error
// A grid point whose generator or run throws produces a row carrying the
// message in the final column; the sweep continues. Rows are computed in
// parallel but emitted strictly in grid order.
std::string sweep_csv(ScenarioKind kind, const std::vector<ScenarioParams>& grid,
                      std::optional<Procedure> proc = std::nullopt);

struct FuzzViolation {
  std::string check;     // which inequality or weight check failed
  std::string detail;    // measured vs allowed
  std::string instance;  // full instance dump for replay
};

struct FuzzReport {
  int runs = 0;
  int skipped_unproven = 0;  // optimum not proven within budget; bounds not judged
  long long checks = 0;      // individual inequalities evaluated
  std::vector<FuzzViolation> violations;
  bool pass() const { return violations.empty(); }
  std::string summary() const;
};

// Seeded random instances (dyadic sizes, optional global size cap beta).
// Every run checks, against the proven optimum:
//   single-active-bin greedy  <= (3 - 2/k) OPT + 1   plus its weight checks
//   lowest-load greedy        <= (3 - 3/k) OPT + 1   plus its weight checks
//   lowest-index greedy       <= (1 + (k-t)(t+1)/(kt)) OPT + 2, when beta
//                                caps sizes at 1/t and k > t, plus weights
//   sum of per-cluster optima <= ceil((4k-2)/(k+1) * OPT) on admissible
//                                random clusterings
//   batch-separated rebuild   <= (2 - 1/k) P + 3  (two batches, k >= 3)
//                             <= (5/2 - 2/k) P + 5 (three batches, k >= 4)
//                                for a valid packing P, plus feasibility
// Violations carry the full instance text; none are expected.
FuzzReport fuzz(std::uint64_t seed, int count, int max_n, int k_lo, int k_hi,
                std::optional<Rational> beta = std::nullopt);

// Seeded random vector instances (2 <= d <= max_d): per-cluster greedy
// total <= 2d * OPT on admissible clusterings.
FuzzReport fuzz_vector(std::uint64_t seed, int count, int max_n, int max_d);

// Line chart of ratio_dec against N from a sweep CSV, one polyline per
// (kind,k,t,d,q) group plus a dashed target asymptote. Deterministic
// output, no external renderer. Error rows and rows without a ratio are
// skipped; an empty CSV yields an empty-axes chart.
std::string emit_plot(const std::string& csv);

}  // namespace ccbp

#endif
