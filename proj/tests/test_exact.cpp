#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ccbp/algorithms.hpp"
#include "ccbp/exact.hpp"

using namespace ccbp;

namespace {

Instance from_sizes(std::vector<Rational> sizes, int k,
                    std::optional<Rational> beta = std::nullopt) {
  std::vector<Item> items;
  int id = 0;
  for (auto& s : sizes) items.push_back({id++, s, std::nullopt, std::nullopt, {}});
  return make_instance(std::move(items), k, beta);
}

}  // namespace

TEST_CASE("optimal certifies the empty instance") {
  OptCertificate cert = optimal(make_instance({}, 3));
  CHECK(cert.cost() == 0);
  CHECK(cert.exact);
}

TEST_CASE("optimal pins down small frozen instances") {
  // five items of size 3/10 with k=2: sizes would allow 2 bins, the
  // cardinality cap forces ceil(5/2) = 3
  OptCertificate five_small = optimal(from_sizes(std::vector<Rational>(5, rat(3, 10)), 2));
  CHECK(five_small.cost() == 3);
  CHECK(five_small.exact);

  // five halves with k=2: both constraints agree on 3 bins
  OptCertificate five_halves = optimal(from_sizes(std::vector<Rational>(5, rat(1, 2)), 2));
  CHECK(five_halves.cost() == 3);
  CHECK(five_halves.exact);

  // a single full item occupies exactly one bin
  OptCertificate one_full = optimal(from_sizes({rat(1)}, 4));
  CHECK(one_full.cost() == 1);
  CHECK(one_full.exact);

  CHECK(brute_force(make_instance({}, 2)) == 0);
  CHECK(brute_force(from_sizes(std::vector<Rational>(3, rat(1, 2)), 3)) == 2);
  CHECK(brute_force(from_sizes(std::vector<Rational>(4, rat(0)), 2)) == 2);
}

TEST_CASE("items above one half force singleton bins for everyone") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Rational> sizes;
    for (int i = 0; i < n; ++i) {
      long long num = 33 + static_cast<long long>(rng() % 32);  // in (1/2, 1]
      sizes.push_back(rat(num, 64));
    }
    Instance inst = from_sizes(std::move(sizes), 2);
    OptCertificate cert = optimal(inst);
    CHECK(cert.exact);
    CHECK(cert.cost() == n);
    CHECK(next_fit(inst).cost() == n);
    CHECK(worst_fit(inst).cost() == n);
    CHECK(first_fit(inst).cost() == n);
    if (n <= 8) CHECK(brute_force(inst) == n);
  }
}

TEST_CASE("batched_cost with a single batch matches the global optimum") {
  std::vector<Item> items;
  items.push_back({0, rat(1, 2), std::nullopt, 1, {}});
  items.push_back({1, rat(3, 10), std::nullopt, 1, {}});
  items.push_back({2, rat(1, 5), std::nullopt, 1, {}});
  Instance inst = make_instance(std::move(items), 3);
  BatchedReport rep = batched_cost(inst);
  CHECK(rep.total == optimal(inst).cost());
  CHECK(rep.total == 1);
}

TEST_CASE("optimal proves a value above every static bound") {
  // sizes 0.7 0.6 0.5 0.4 0.4 0.4: size bound 3, big-item bound 2, but no
  // 3-bin packing exists
  Instance inst = from_sizes({rat(7, 10), rat(3, 5), rat(1, 2), rat(2, 5),
                              rat(2, 5), rat(2, 5)}, 6);
  OptCertificate cert = optimal(inst);
  CHECK(cert.cost() == 4);
  CHECK(cert.lower == 4);
  CHECK(cert.exact);
  CHECK(cert.lower_kind == LowerKind::exhaustive);
  CHECK(validate_packing(inst, cert.upper).valid());
  CHECK(brute_force(inst) == 4);
}

TEST_CASE("a starved node budget still yields a valid certificate") {
  Instance inst = from_sizes({rat(7, 10), rat(3, 5), rat(1, 2), rat(2, 5),
                              rat(2, 5), rat(2, 5)}, 6);
  SolveOptions starved;
  starved.exact_limit = 0;
  starved.node_budget = 1;
  OptCertificate cert = optimal(inst, starved);
  CHECK(validate_packing(inst, cert.upper).valid());
  CHECK(cert.cost() == 4);
  CHECK(cert.lower == 3);  // static bound only
  CHECK_FALSE(cert.exact);
}

TEST_CASE("identical items are solved without blowup") {
  std::vector<Rational> sizes(24, rat(1, 3));
  OptCertificate cert = optimal(from_sizes(std::move(sizes), 3));
  CHECK(cert.cost() == 8);
  CHECK(cert.exact);
}

TEST_CASE("cardinality cap binds even for zero sizes") {
  std::vector<Rational> sizes(7, rat(0));
  OptCertificate cert = optimal(from_sizes(std::move(sizes), 3));
  CHECK(cert.cost() == 3);
  CHECK(cert.exact);
  CHECK(cert.lower_kind == LowerKind::cardinality_bound);
}

TEST_CASE("optimal equals brute_force on random small instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int k = 2 + static_cast<int>(rng() % 3);
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Rational> sizes;
    for (int i = 0; i < n; ++i)
      sizes.push_back(rat(static_cast<long long>(rng() % 33), 32));
    Instance inst = from_sizes(std::move(sizes), k);
    OptCertificate cert = optimal(inst);
    REQUIRE(cert.exact);
    CHECK(cert.cost() == brute_force(inst));
    CHECK(validate_packing(inst, cert.upper).valid());
  }
}

TEST_CASE("optimal handles vector demands") {
  std::vector<Item> items;
  // three items pairwise-compatible in one component but not the other
  items.push_back({0, rat(3, 5), std::nullopt, std::nullopt, {rat(3, 5), rat(1, 5)}});
  items.push_back({1, rat(3, 5), std::nullopt, std::nullopt, {rat(3, 5), rat(1, 5)}});
  items.push_back({2, rat(1, 5), std::nullopt, std::nullopt, {rat(1, 5), rat(9, 10)}});
  Instance inst = make_instance(std::move(items), 3, std::nullopt, 2);
  OptCertificate cert = optimal(inst);
  CHECK(cert.cost() == 3);
  CHECK(cert.exact);
}

TEST_CASE("brute_force refuses large inputs") {
  std::vector<Rational> sizes(11, rat(1, 2));
  CHECK_THROWS_AS(brute_force(from_sizes(std::move(sizes), 2)),
                  std::invalid_argument);
}

TEST_CASE("clustered_cost sums per-cluster optima and flags thin clusters") {
  // cluster 1: two halves + one half -> 2 bins (admissible)
  // cluster 2: single small item -> 1 bin (inadmissible)
  std::vector<Item> items;
  items.push_back({0, rat(1, 2), 1, std::nullopt, {}});
  items.push_back({1, rat(1, 2), 1, std::nullopt, {}});
  items.push_back({2, rat(1, 2), 1, std::nullopt, {}});
  items.push_back({3, rat(1, 10), 2, std::nullopt, {}});
  Instance inst = make_instance(std::move(items), 2);
  ClusteredReport rep = clustered_cost(inst);
  CHECK(rep.total == 3);
  REQUIRE(rep.clusters.size() == 2);
  CHECK(rep.clusters[0].label == 1);
  CHECK(rep.clusters[0].cert.cost() == 2);
  CHECK(rep.clusters[1].cert.cost() == 1);
  CHECK(rep.inadmissible == std::vector<int>{2});
  CHECK(rep.all_exact);
}

TEST_CASE("batched_cost sums per-batch optima") {
  std::vector<Item> items;
  items.push_back({0, rat(1, 2), std::nullopt, 1, {}});
  items.push_back({1, rat(1, 2), std::nullopt, 1, {}});
  items.push_back({2, rat(1, 2), std::nullopt, 2, {}});
  items.push_back({3, rat(1, 2), std::nullopt, 2, {}});
  Instance inst = make_instance(std::move(items), 4);
  BatchedReport rep = batched_cost(inst);
  CHECK(rep.total == 2);  // one bin per batch; global optimum would be 1 bin? no: 4 halves = 2 anyway
  CHECK(rep.all_exact);
  REQUIRE(rep.batches.size() == 2);
  CHECK(rep.batches[0].cert.cost() == 1);
}

TEST_CASE("repack splits a mixed bin and keeps batches apart") {
  // global optimum packs 0.6 (batch 1) with 0.2+0.1 (batch 2) in one bin
  std::vector<Item> items;
  items.push_back({0, rat(3, 5), std::nullopt, 1, {}});
  items.push_back({1, rat(1, 5), std::nullopt, 2, {}});
  items.push_back({2, rat(1, 10), std::nullopt, 2, {}});
  Instance inst = make_instance(std::move(items), 3);
  Packing opt{{Bin{{0, 1, 2}}}};
  REQUIRE(validate_packing(inst, opt).valid());
  Packing rp = repack_batched(opt, inst, 2);
  CHECK(validate_packing(inst, rp).valid());
  for (const auto& bin : rp.bins) {
    int batch = *inst.item_by_id(bin.item_ids[0]).batch;
    for (int id : bin.item_ids) CHECK(*inst.item_by_id(id).batch == batch);
  }
  CHECK(Rational(rp.cost()) <= rat(2 * 3 - 1, 3) * Rational(opt.cost()) + 3);
}

TEST_CASE("repack parameter validation") {
  std::vector<Item> items;
  items.push_back({0, rat(1, 2), std::nullopt, 1, {}});
  Instance k2 = make_instance(items, 2);
  Packing p{{Bin{{0}}}};
  CHECK_THROWS_AS(repack_batched(p, k2, 2), std::invalid_argument);  // k < 3
  Instance k3 = make_instance(items, 3);
  CHECK_THROWS_AS(repack_batched(p, k3, 3), std::invalid_argument);  // q=3 needs k>=4
  CHECK_THROWS_AS(repack_batched(p, k3, 4), std::invalid_argument);  // q out of range
}

TEST_CASE("repack bound holds on random batched instances") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int q = 2 + static_cast<int>(rng() % 2);
    int k = (q == 2 ? 3 : 4) + static_cast<int>(rng() % 3);
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<Item> items;
    bool seen[4] = {};
    for (int i = 0; i < n; ++i) {
      int b = 1 + static_cast<int>(rng() % q);
      seen[b] = true;
      items.push_back({i, rat(static_cast<long long>(rng() % 33), 32),
                       std::nullopt, b, {}});
    }
    // keep batch labels contiguous
    for (int b = 1, next = 1; b <= q; ++b)
      if (seen[b]) {
        for (auto& it : items)
          if (*it.batch == b) it.batch = next;
        ++next;
      }
    Instance inst = make_instance(std::move(items), k);
    int q_eff = inst.max_batch();
    if (q_eff < 2) continue;
    OptCertificate cert = optimal(inst);
    Packing rp = repack_batched(cert.upper, inst, q_eff);
    CHECK(validate_packing(inst, rp).valid());
    for (const auto& bin : rp.bins) {
      int batch = *inst.item_by_id(bin.item_ids[0]).batch;
      for (int id : bin.item_ids) CHECK(*inst.item_by_id(id).batch == batch);
    }
    Rational limit = q_eff == 2 ? rat(2 * k - 1, k) * Rational(cert.cost()) + 3
                                : rat(5 * k - 4, 2 * k) * Rational(cert.cost()) + 5;
    CHECK(Rational(rp.cost()) <= limit);
  }
}
