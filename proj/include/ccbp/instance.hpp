#ifndef CCBP_INSTANCE_HPP
#define CCBP_INSTANCE_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccbp/rational.hpp"

namespace ccbp {

// One item with an exact size in [0,1]. Cluster and batch labels are
// 1-based when present. For vector instances (d >= 2) the per-component
// demands live in `components`; by convention `size` mirrors component 0.
struct Item {
  int id = 0;
  Rational size;
  std::optional<int> cluster;
  std::optional<int> batch;
  std::vector<Rational> components;
};

// An ordered sequence of items plus the bin constraints: every bin holds at
// most k items of total size at most 1 (component-wise for d >= 2). The
// arrival order is part of the instance; online runs consume items as given.
// When beta is set, all sizes are <= beta and t = floor(1/beta).
struct Instance {
  std::vector<Item> items;
  int k = 1;
  std::optional<Rational> beta;
  int d = 1;

  std::size_t size() const { return items.size(); }
  bool has_beta() const { return beta.has_value(); }
  int t() const;  // requires beta
  const Item& item_by_id(int id) const;
  bool has_clusters() const;
  bool has_batches() const;
  int max_cluster() const;
  int max_batch() const;

 private:
  mutable std::unordered_map<int, std::size_t> id_index_;
};

// Validates invariants (unique ids, sizes in range and <= beta, component
// counts, labels >= 1 used all-or-none) and returns the instance.
// Label contiguity 1..l is enforced by the parser and by the generators,
// not here, so that split_by results remain valid instances.
Instance make_instance(std::vector<Item> items, int k,
                       std::optional<Rational> beta = std::nullopt, int d = 1);

// Line-oriented instance text format:
//   header:  k=<int> [beta=<p/q>] [d=<int>]
//   item:    <id> <size>[,<cluster>][,<batch>][|c1;c2;...]
// Sizes and components are exact "p/q" rationals (or bare integers);
// decimals are rejected. '#' starts a comment, blank lines are skipped.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ccbp

#endif
