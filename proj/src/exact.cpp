#include "ccbp/exact.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "ccbp/algorithms.hpp"

namespace ccbp {

namespace {

std::vector<Rational> demands(const Instance& inst, const Item& it) {
  if (inst.d == 1) return {it.size};
  return it.components;
}

bool bin_fits(const std::vector<Rational>& loads, int count,
              const std::vector<Rational>& dem, int k) {
  if (count > k - 1) return false;
  for (std::size_t c = 0; c < loads.size(); ++c)
    if (loads[c] + dem[c] > 1) return false;
  return true;
}

struct SearchBin {
  std::vector<Rational> loads;
  int count = 0;
  std::vector<int> ids;
};

Packing greedy_decreasing(const Instance& inst,
                          const std::vector<int>& order_desc,
                          const std::vector<std::vector<Rational>>& dem) {
  std::vector<SearchBin> bins;
  for (int idx : order_desc) {
    int target = -1;
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (bin_fits(bins[b].loads, bins[b].count, dem[idx], inst.k)) {
        target = static_cast<int>(b);
        break;
      }
    }
    if (target < 0) {
      bins.push_back({std::vector<Rational>(inst.d, Rational(0)), 0, {}});
      target = static_cast<int>(bins.size()) - 1;
    }
    for (int c = 0; c < inst.d; ++c) bins[target].loads[c] += dem[idx][c];
    bins[target].count++;
    bins[target].ids.push_back(inst.items[idx].id);
  }
  Packing p;
  for (auto& b : bins) p.bins.push_back(Bin{std::move(b.ids)});
  return p;
}

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, long long budget, long long initial_best)
      : inst_(inst),
        n_(static_cast<int>(inst.items.size())),
        budget_(budget),
        best_cost_(initial_best) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    dem_.reserve(n_);
    for (const auto& it : inst.items) dem_.push_back(demands(inst, it));
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      Rational sa = std::accumulate(dem_[a].begin(), dem_[a].end(), Rational(0));
      Rational sb = std::accumulate(dem_[b].begin(), dem_[b].end(), Rational(0));
      return sa > sb;
    });
    suffix_.assign(n_ + 1, std::vector<Rational>(inst.d, Rational(0)));
    for (int i = n_ - 1; i >= 0; --i)
      for (int c = 0; c < inst.d; ++c)
        suffix_[i][c] = suffix_[i + 1][c] + dem_[order_[i]][c];
    sum_loads_.assign(inst.d, Rational(0));
    placed_bin_.assign(n_, -1);
  }

  // Returns true if the search ran to completion (proof of optimality).
  bool run(Packing& best_out, long long& best_cost_out) {
    dfs(0);
    best_cost_out = best_cost_;
    best_out = std::move(best_packing_);
    return !aborted_;
  }

  bool found_packing() const { return !best_packing_.bins.empty() || best_cost_ == 0; }

 private:
  void dfs(int i) {
    if (aborted_) return;
    if (budget_ > 0 && ++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    long long used = static_cast<long long>(bins_.size());
    if (i == n_) {
      if (used < best_cost_) {
        best_cost_ = used;
        best_packing_.bins.clear();
        for (const auto& b : bins_) best_packing_.bins.push_back(Bin{b.ids});
      }
      return;
    }
    if (used >= best_cost_) return;
    if (lower_estimate(i, used) >= best_cost_) return;

    const auto& dem = dem_[order_[i]];
    int start = 0;
    if (i > 0 && dem_[order_[i]] == dem_[order_[i - 1]])
      start = placed_bin_[i - 1];  // identical items never move left

    for (std::size_t b = start; b < bins_.size(); ++b) {
      bool duplicate = false;
      for (std::size_t b2 = start; b2 < b; ++b2) {
        if (bins_[b2].count == bins_[b].count && bins_[b2].loads == bins_[b].loads) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      if (!bin_fits(bins_[b].loads, bins_[b].count, dem, inst_.k)) continue;
      place(static_cast<int>(b), i);
      dfs(i + 1);
      unplace(static_cast<int>(b), i);
      if (aborted_) return;
    }
    if (used + 1 < best_cost_) {
      bins_.push_back({std::vector<Rational>(inst_.d, Rational(0)), 0, {}});
      place(static_cast<int>(bins_.size()) - 1, i);
      dfs(i + 1);
      unplace(static_cast<int>(bins_.size()) - 1, i);
      bins_.pop_back();
    }
  }

  long long lower_estimate(int i, long long used) {
    // Size: remaining demand beyond the free room of open bins needs new bins.
    long long extra = 0;
    for (int c = 0; c < inst_.d; ++c) {
      Rational free = Rational(used) - sum_loads_[c];
      Rational need = suffix_[i][c] - free;
      if (need > 0) extra = std::max(extra, to_ll(ceil_rat(need)));
    }
    // Cardinality: same, with item slots.
    long long slots_free = used * inst_.k - i;
    long long remaining = n_ - i;
    if (remaining > slots_free)
      extra = std::max(extra, (remaining - slots_free + inst_.k - 1) / inst_.k);
    return used + extra;
  }

  void place(int b, int i) {
    const auto& dem = dem_[order_[i]];
    for (int c = 0; c < inst_.d; ++c) {
      bins_[b].loads[c] += dem[c];
      sum_loads_[c] += dem[c];
    }
    bins_[b].count++;
    bins_[b].ids.push_back(inst_.items[order_[i]].id);
    placed_bin_[i] = b;
  }

  void unplace(int b, int i) {
    const auto& dem = dem_[order_[i]];
    for (int c = 0; c < inst_.d; ++c) {
      bins_[b].loads[c] -= dem[c];
      sum_loads_[c] -= dem[c];
    }
    bins_[b].count--;
    bins_[b].ids.pop_back();
    placed_bin_[i] = -1;
  }

  const Instance& inst_;
  int n_;
  long long budget_;
  long long nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> order_;
  std::vector<std::vector<Rational>> dem_;
  std::vector<std::vector<Rational>> suffix_;
  std::vector<Rational> sum_loads_;
  std::vector<SearchBin> bins_;
  std::vector<int> placed_bin_;
  long long best_cost_;
  Packing best_packing_;
};

}  // namespace

OptCertificate optimal(const Instance& inst, const SolveOptions& opts) {
  const int n = static_cast<int>(inst.items.size());
  LowerBounds lb = lower_bounds(inst);

  std::vector<int> order_desc(n);
  std::iota(order_desc.begin(), order_desc.end(), 0);
  std::vector<std::vector<Rational>> dem;
  dem.reserve(n);
  for (const auto& it : inst.items) dem.push_back(demands(inst, it));
  std::stable_sort(order_desc.begin(), order_desc.end(), [&](int a, int b) {
    Rational sa = std::accumulate(dem[a].begin(), dem[a].end(), Rational(0));
    Rational sb = std::accumulate(dem[b].begin(), dem[b].end(), Rational(0));
    return sa > sb;
  });
  Packing greedy = greedy_decreasing(inst, order_desc, dem);
  Packing arrival = inst.d == 1 ? first_fit(inst) : first_fit_vector(inst);
  if (arrival.cost() < greedy.cost()) greedy = std::move(arrival);

  if (greedy.cost() == lb.value) return make_certificate(std::move(greedy), lb);

  long long budget = n <= opts.exact_limit ? 0 : opts.node_budget;
  BranchAndBound bnb(inst, budget, greedy.cost());
  Packing best;
  long long best_cost = 0;
  bool proven = bnb.run(best, best_cost);
  if (best_cost == greedy.cost()) best = std::move(greedy);

  OptCertificate cert;
  cert.upper = std::move(best);
  if (proven) {
    cert.lower = best_cost;
    cert.lower_kind = best_cost == lb.value ? lb.kind : LowerKind::exhaustive;
  } else {
    cert.lower = lb.value;
    cert.lower_kind = lb.kind;
  }
  cert.exact = cert.upper.cost() == cert.lower;
  return cert;
}

namespace {

struct BruteState {
  const Instance* inst;
  std::vector<std::vector<Rational>> dem;
  std::vector<SearchBin> bins;
  long long best;

  void rec(std::size_t i) {
    if (static_cast<long long>(bins.size()) >= best) return;
    if (i == dem.size()) {
      best = static_cast<long long>(bins.size());
      return;
    }
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (!bin_fits(bins[b].loads, bins[b].count, dem[i], inst->k)) continue;
      for (int c = 0; c < inst->d; ++c) bins[b].loads[c] += dem[i][c];
      bins[b].count++;
      rec(i + 1);
      bins[b].count--;
      for (int c = 0; c < inst->d; ++c) bins[b].loads[c] -= dem[i][c];
    }
    bins.push_back({std::vector<Rational>(inst->d, Rational(0)), 0, {}});
    for (int c = 0; c < inst->d; ++c) bins.back().loads[c] += dem[i][c];
    bins.back().count++;
    rec(i + 1);
    bins.pop_back();
  }
};

}  // namespace

long long brute_force(const Instance& inst) {
  if (inst.items.size() > 10)
    throw std::invalid_argument("brute_force handles at most 10 items");
  if (inst.items.empty()) return 0;
  BruteState st;
  st.inst = &inst;
  for (const auto& it : inst.items) st.dem.push_back(demands(inst, it));
  st.best = static_cast<long long>(inst.items.size());  // singletons always work
  st.rec(0);
  return st.best;
}

ClusteredReport clustered_cost(const Instance& inst, const SolveOptions& opts) {
  ClusteredReport report;
  auto parts = split_by_cluster(inst);
  int label = 0;
  for (const auto& sub : parts) {
    ++label;
    int actual = sub.items.front().cluster.value_or(label);
    PartCost pc;
    pc.label = actual;
    pc.cert = optimal(sub, opts);
    report.total += pc.cert.cost();
    report.all_exact = report.all_exact && pc.cert.exact;
    if (pc.cert.cost() < 2) report.inadmissible.push_back(actual);
    report.clusters.push_back(std::move(pc));
  }
  return report;
}

BatchedReport batched_cost(const Instance& inst, const SolveOptions& opts) {
  BatchedReport report;
  auto parts = split_by_batch(inst);
  int label = 0;
  for (const auto& sub : parts) {
    ++label;
    PartCost pc;
    pc.label = sub.items.front().batch.value_or(label);
    pc.cert = optimal(sub, opts);
    report.total += pc.cert.cost();
    report.all_exact = report.all_exact && pc.cert.exact;
    report.batches.push_back(std::move(pc));
  }
  return report;
}

namespace {

struct Side {
  std::vector<int> ids;
  Rational size;
  int count = 0;
};

// Pair up same-batch sides in ascending order; an odd remainder stays alone.
void pair_sides(const std::vector<Side>& pool, Packing& out) {
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
    Bin merged;
    merged.item_ids = pool[i].ids;
    merged.item_ids.insert(merged.item_ids.end(), pool[i + 1].ids.begin(),
                           pool[i + 1].ids.end());
    out.bins.push_back(std::move(merged));
  }
  if (pool.size() % 2) out.bins.push_back(Bin{pool.back().ids});
}

// Destroy a prefix of the crowded pool (fewest items first) and spread the
// displaced items over the survivors: q=2 places one item per survivor,
// q=3 places up to two (a pair from one bin, or two leftover singletons).
void repack_crowded(const Instance& inst, std::vector<Side> pool, int q,
                    Packing& out) {
  if (pool.empty()) return;
  const int k = inst.k;
  long long X = static_cast<long long>(pool.size());

  std::vector<std::size_t> by_count(pool.size());
  std::iota(by_count.begin(), by_count.end(), 0);
  std::stable_sort(by_count.begin(), by_count.end(),
                   [&](std::size_t a, std::size_t b) {
                     return pool[a].count < pool[b].count;
                   });

  long long D = 0;
  if (q == 2) {
    D = X / k;  // displaced <= (k-1)D <= X - D survivors, one item each
  } else {
    for (D = 2 * X / k; D > 0; --D) {
      long long units = 0, odd = 0;
      for (long long i = 0; i < D; ++i) {
        units += pool[by_count[i]].count / 2;
        odd += pool[by_count[i]].count % 2;
      }
      units += (odd + 1) / 2;
      if (units <= X - D) break;
    }
  }

  std::vector<bool> destroyed(pool.size(), false);
  for (long long i = 0; i < D; ++i) destroyed[by_count[i]] = true;

  // Units of at most two items each; a unit never mixes two destroyed bins
  // except for the leftover singletons (smallest item of an odd bin, size
  // below 1/k, so two of them still fit any survivor).
  std::vector<std::vector<int>> units;
  std::vector<int> singletons;
  for (std::size_t s = 0; s < pool.size(); ++s) {
    if (!destroyed[s]) continue;
    std::vector<int> ids = pool[s].ids;
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
      return inst.item_by_id(a).size < inst.item_by_id(b).size;
    });
    std::size_t start = 0;
    if (q == 3) {
      if (ids.size() % 2) {
        singletons.push_back(ids[0]);
        start = 1;
      }
      for (std::size_t i = start; i + 1 < ids.size(); i += 2)
        units.push_back({ids[i], ids[i + 1]});
    } else {
      for (int id : ids) units.push_back({id});
    }
  }
  for (std::size_t i = 0; i + 1 < singletons.size(); i += 2)
    units.push_back({singletons[i], singletons[i + 1]});
  if (singletons.size() % 2) units.push_back({singletons.back()});

  std::vector<Side> survivors;
  for (std::size_t s = 0; s < pool.size(); ++s)
    if (!destroyed[s]) survivors.push_back(pool[s]);
  assert(units.size() <= survivors.size());
  for (std::size_t u = 0; u < units.size(); ++u)
    survivors[u].ids.insert(survivors[u].ids.end(), units[u].begin(),
                            units[u].end());
  for (auto& s : survivors) out.bins.push_back(Bin{std::move(s.ids)});
}

}  // namespace

Packing repack_batched(const Packing& opt, const Instance& inst, int q) {
  if (q != 2 && q != 3) throw std::invalid_argument("repack_batched supports q in {2,3}");
  if (q == 2 && inst.k < 3) throw std::invalid_argument("q=2 repacking needs k >= 3");
  if (q == 3 && inst.k < 4) throw std::invalid_argument("q=3 repacking needs k >= 4");
  if (!inst.has_batches()) throw std::invalid_argument("instance carries no batch labels");
  if (inst.max_batch() != q)
    throw std::invalid_argument("batch count mismatch: instance has " +
                                std::to_string(inst.max_batch()) + " batches, q=" +
                                std::to_string(q));
  ValidityReport vr = validate_packing(inst, opt);
  if (!vr.valid())
    throw std::invalid_argument("repack_batched requires a valid packing: " + vr.summary());

  const int k = inst.k;
  Packing out;
  std::vector<std::vector<Side>> y_pool(q + 1), x_pool(q + 1);

  for (const auto& bin : opt.bins) {
    std::vector<Side> side(q + 1);
    for (int id : bin.item_ids) {
      const Item& it = inst.item_by_id(id);
      Side& s = side[*it.batch];
      s.ids.push_back(id);
      s.size += it.size;
      s.count++;
    }
    std::vector<int> present;
    for (int b = 1; b <= q; ++b)
      if (side[b].count > 0) present.push_back(b);

    if (present.size() <= 1 || (q == 3 && present.size() == 2)) {
      // No batch missing from the analysis side: copy, or split per batch.
      for (int b : present) out.bins.push_back(Bin{side[b].ids});
      continue;
    }

    auto small_side = [&](const Side& s) {
      return s.size <= Rational(1, 2) && 2 * s.count <= k;
    };

    if (q == 2) {
      if (small_side(side[1])) {
        out.bins.push_back(Bin{side[2].ids});
        y_pool[1].push_back(side[1]);
      } else if (small_side(side[2])) {
        out.bins.push_back(Bin{side[1].ids});
        y_pool[2].push_back(side[2]);
      } else {
        int crowded = side[1].size <= Rational(1, 2) ? 1 : 2;
        int big = 3 - crowded;
        assert(side[crowded].size <= Rational(1, 2) && 2 * side[crowded].count > k);
        assert(side[big].size > Rational(1, 2) && 2 * side[big].count <= k);
        out.bins.push_back(Bin{side[big].ids});
        x_pool[crowded].push_back(side[crowded]);
      }
    } else {
      int n_small = 0;
      for (int b = 1; b <= 3; ++b)
        if (small_side(side[b])) ++n_small;
      if (n_small >= 2) {
        for (int b = 1; b <= 3; ++b) {
          if (small_side(side[b]))
            y_pool[b].push_back(side[b]);
          else
            out.bins.push_back(Bin{side[b].ids});
        }
      } else {
        int crowded = 0;
        for (int b = 1; b <= 3; ++b)
          if (side[b].size <= Rational(1, 2) && 2 * side[b].count > k) crowded = b;
        assert(crowded != 0);
        for (int b = 1; b <= 3; ++b) {
          if (b == crowded) {
            x_pool[b].push_back(side[b]);
          } else if (small_side(side[b])) {
            y_pool[b].push_back(side[b]);
          } else {
            out.bins.push_back(Bin{side[b].ids});  // the big side
          }
        }
      }
    }
  }

  for (int b = 1; b <= q; ++b) pair_sides(y_pool[b], out);
  for (int b = 1; b <= q; ++b) repack_crowded(inst, std::move(x_pool[b]), q, out);
  return out;
}

}  // namespace ccbp
