#ifndef CCBP_PACKING_HPP
#define CCBP_PACKING_HPP

#include <string>
#include <vector>

#include "ccbp/instance.hpp"

namespace ccbp {

// A bin is the set of item ids it holds; loads and counts are derived
// against an instance. A packing is an ordered list of non-empty bins.
struct Bin {
  std::vector<int> item_ids;
  int count() const { return static_cast<int>(item_ids.size()); }
};

struct Packing {
  std::vector<Bin> bins;
  long long cost() const { return static_cast<long long>(bins.size()); }
};

Rational bin_load(const Instance& inst, const Bin& bin);
std::vector<Rational> bin_load_vector(const Instance& inst, const Bin& bin);

enum class ViolationKind { overload, overcount, missing_item, duplicate_item };

struct Violation {
  ViolationKind kind;
  int bin = -1;        // bin index where it applies
  int component = -1;  // offending component for overload with d >= 2
  int item_id = -1;    // offending item for missing/duplicate
  std::string detail;
};

// Feasibility violations and structural errors (ids not in the instance)
// are reported separately: a packing that names unknown ids is not merely
// infeasible, it does not refer to the instance at all.
struct ValidityReport {
  std::vector<Violation> violations;
  std::vector<std::string> structural_errors;
  bool valid() const { return violations.empty() && structural_errors.empty(); }
  std::string summary() const;
};

ValidityReport validate_packing(const Instance& inst, const Packing& p);

enum class LowerKind { size_bound, cardinality_bound, big_item_bound, exhaustive };

std::string lower_kind_name(LowerKind k);

struct LowerBounds {
  long long value = 0;
  LowerKind kind = LowerKind::size_bound;
  long long size_bound = 0;         // max over components of ceil(total demand)
  long long cardinality_bound = 0;  // ceil(n / k)
  long long big_item_bound = 0;     // items of size > 1/2 (d = 1 only)
};

LowerBounds lower_bounds(const Instance& inst);

// Feasible packing plus a matching combinatorial lower bound. exact is
// defined as |upper.bins| == lower.
struct OptCertificate {
  Packing upper;
  long long lower = 0;
  LowerKind lower_kind = LowerKind::size_bound;
  bool exact = false;
  long long cost() const { return upper.cost(); }
};

OptCertificate make_certificate(Packing upper, const LowerBounds& lb);

// Split into per-label sub-instances, ascending label. Arrival order and
// item ids are preserved; k, beta, d are inherited. Errors if any item
// lacks the key.
std::vector<Instance> split_by_cluster(const Instance& inst);
std::vector<Instance> split_by_batch(const Instance& inst);

}  // namespace ccbp

#endif
