#ifndef CCBP_EXACT_HPP
#define CCBP_EXACT_HPP

#include "ccbp/packing.hpp"

namespace ccbp {

struct SolveOptions {
  // Instances up to this many items are solved to proven optimality.
  int exact_limit = 24;
  // Node cap applied only above exact_limit; the solver then returns the
  // best packing found plus the combinatorial lower bound.
  long long node_budget = 500000;
};

// Branch and bound over item-to-bin assignments: items sorted by
// non-increasing size, bin symmetry broken by skipping bins in an equal
// state, identical items forced into non-decreasing bin indices, nodes
// pruned against size/cardinality bounds on the remainder.
OptCertificate optimal(const Instance& inst, const SolveOptions& opts = {});

// Exhaustive set-partition search (feasible partitions only), n <= 10.
// Deliberately independent of optimal(): no ordering, no bounds.
long long brute_force(const Instance& inst);

struct PartCost {
  int label = 0;
  OptCertificate cert;
};

// Sum of per-cluster optima. Clusters whose own optimum is below 2 break
// the usual admissibility assumption and are flagged; the sum is still
// returned.
struct ClusteredReport {
  long long total = 0;
  std::vector<PartCost> clusters;
  std::vector<int> inadmissible;
  bool all_exact = true;
};

ClusteredReport clustered_cost(const Instance& inst, const SolveOptions& opts = {});

// Sum of per-batch optima (bins never mix batches).
struct BatchedReport {
  long long total = 0;
  std::vector<PartCost> batches;
  bool all_exact = true;
};

BatchedReport batched_cost(const Instance& inst, const SolveOptions& opts = {});

// Rebuilds a batch-respecting packing from a global packing, for q = 2
// (needs k >= 3) or q = 3 (needs k >= 4). Single-batch bins are copied.
// A mixed bin's batch side with total size <= 1/2 and at most k/2 items is
// split off and merged pairwise with its peers; a side with more than k/2
// items but total <= 1/2 joins a per-batch pool in which a fraction of the
// bins is destroyed and their items are spread over the surviving ones.
// Cost is at most (2 - 1/k)|opt| + 3 for q = 2 and (5/2 - 2/k)|opt| + 5
// for q = 3.
Packing repack_batched(const Packing& opt, const Instance& inst, int q);

}  // namespace ccbp

#endif
