#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ccbp/algorithms.hpp"

using namespace ccbp;

namespace {

Instance from_sizes(std::vector<Rational> sizes, int k,
                    std::optional<Rational> beta = std::nullopt) {
  std::vector<Item> items;
  int id = 0;
  for (auto& s : sizes) items.push_back({id++, s, std::nullopt, std::nullopt, {}});
  return make_instance(std::move(items), k, beta);
}

std::vector<std::vector<int>> shape(const Packing& p) {
  std::vector<std::vector<int>> out;
  for (const auto& b : p.bins) out.push_back(b.item_ids);
  return out;
}

}  // namespace

TEST_CASE("fits treats both limits as closed") {
  CHECK(fits(rat(1, 2), 1, rat(1, 2), 2));        // load exactly 1
  CHECK_FALSE(fits(rat(1, 2), 2, rat(0), 2));     // count already k
  CHECK_FALSE(fits(rat(1, 2), 1, rat(2, 3), 2));  // load above 1
  CHECK(fits(rat(0), 0, rat(1), 1));              // single full item
  CHECK(fits_vector({rat(1, 2), rat(1, 4)}, 1, {rat(1, 2), rat(3, 4)}, 2));
  CHECK_FALSE(fits_vector({rat(1, 2), rat(1, 4)}, 1, {rat(1, 2), rat(7, 8)}, 2));
}

TEST_CASE("next_fit keeps one active bin and never reopens") {
  // 0.6, 0.5 -> second bin; 0.3 joins it; 0.2 joins it (load 1 exactly);
  // 0.1 would fit bin 1 but NF only sees the active bin 2 which is full.
  Instance inst = from_sizes(
      {rat(3, 5), rat(1, 2), rat(3, 10), rat(1, 5), rat(1, 10)}, 4);
  Packing p = next_fit(inst);
  CHECK(shape(p) == std::vector<std::vector<int>>{{0}, {1, 2, 3}, {4}});
  CHECK(validate_packing(inst, p).valid());
}

TEST_CASE("next_fit closes on the cardinality limit too") {
  Instance inst = from_sizes({rat(0), rat(0), rat(0), rat(0), rat(0)}, 2);
  CHECK(next_fit(inst).cost() == 3);
}

TEST_CASE("first_fit picks the lowest feasible index") {
  // 0.6 | 0.5 -> bin 2; 0.3 -> bin 1 (fits there first); 0.5 -> bin 2.
  Instance inst = from_sizes({rat(3, 5), rat(1, 2), rat(3, 10), rat(1, 2)}, 4);
  Packing p = first_fit(inst);
  CHECK(shape(p) == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("worst_fit picks the least-loaded feasible bin") {
  // 0.6 | 0.2: WF puts it in bin 1? loads {0.6}; new item fits bin 1, it is
  // the only bin. 0.5 -> does not fit bin 1 (1.1), opens bin 2. 0.3 -> bin 2
  // is lighter (0.5 vs 0.6). 0.2 -> bin 1 (0.6) vs bin 2 (0.8): bin 1.
  Instance inst = from_sizes(
      {rat(3, 5), rat(1, 2), rat(3, 10), rat(1, 5)}, 4);
  Packing p = worst_fit(inst);
  CHECK(shape(p) == std::vector<std::vector<int>>{{0, 3}, {1, 2}});
}

TEST_CASE("worst_fit breaks load ties towards the lower index") {
  Instance inst = from_sizes({rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 4)}, 2);
  // bins after three halves: {0,1} is full by... k=2: {0,1} load 1 count 2;
  // third half opens bin 2. 1/4 fits bin 2 only (bin 1 full by count).
  Packing p = worst_fit(inst);
  CHECK(shape(p) == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  // equal loads: two bins at 1/2 (k=3), the next item goes to the first
  Instance tie = from_sizes({rat(1, 2), rat(3, 5), rat(1, 2), rat(1, 5)}, 3);
  // 0 -> bin1(.5); 1 -> bin2(.6); 2 -> bin1(1.0); 3 -> bin2 (bin1 overloads)
  Packing q = worst_fit(tie);
  CHECK(shape(q) == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("greedy outputs are always valid and within the k cap") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 1 + static_cast<int>(rng() % 5);
    int n = 1 + static_cast<int>(rng() % 12);
    std::vector<Rational> sizes;
    for (int i = 0; i < n; ++i)
      sizes.push_back(rat(static_cast<long long>(rng() % 65), 64));
    Instance inst = from_sizes(std::move(sizes), k);
    for (auto* algo : {&next_fit, &worst_fit, &first_fit}) {
      Packing p = (*algo)(inst);
      CHECK(validate_packing(inst, p).valid());
    }
  }
}

TEST_CASE("first_fit is prefix-consistent") {
  // Packing a prefix never differs from the prefix of packing the whole:
  // FF never moves an item once placed.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 2 + static_cast<int>(rng() % 4);
    int n = 6 + static_cast<int>(rng() % 6);
    std::vector<Rational> sizes;
    for (int i = 0; i < n; ++i)
      sizes.push_back(rat(static_cast<long long>(rng() % 33), 32));
    Instance whole = from_sizes(sizes, k);
    Packing full = first_fit(whole);
    int cut = static_cast<int>(rng() % n) + 1;
    std::vector<Rational> head(sizes.begin(), sizes.begin() + cut);
    Packing part = first_fit(from_sizes(std::move(head), k));
    for (std::size_t b = 0; b < part.bins.size(); ++b)
      for (std::size_t j = 0; j < part.bins[b].item_ids.size(); ++j) {
        REQUIRE(b < full.bins.size());
        REQUIRE(j < full.bins[b].item_ids.size());
        CHECK(part.bins[b].item_ids[j] == full.bins[b].item_ids[j]);
      }
  }
}

TEST_CASE("next_fit and worst_fit coincide with first_fit on k=1") {
  Instance inst = from_sizes({rat(1, 2), rat(1, 3), rat(1)}, 1);
  CHECK(next_fit(inst).cost() == 3);
  CHECK(worst_fit(inst).cost() == 3);
  CHECK(first_fit(inst).cost() == 3);
}

TEST_CASE("first_fit_vector respects every component") {
  std::vector<Item> items;
  items.push_back({0, rat(1, 2), std::nullopt, std::nullopt, {rat(1, 2), rat(1, 8)}});
  items.push_back({1, rat(1, 2), std::nullopt, std::nullopt, {rat(1, 2), rat(1, 8)}});
  items.push_back({2, rat(1, 8), std::nullopt, std::nullopt, {rat(1, 8), rat(7, 8)}});
  items.push_back({3, rat(0), std::nullopt, std::nullopt, {rat(0), rat(1, 2)}});
  Instance inst = make_instance(std::move(items), 4, std::nullopt, 2);
  Packing p = first_fit_vector(inst);
  // item 2 cannot join bin 1 (component 1 would reach 9/8); item 3 can,
  // landing bin 1 on loads {1, 3/4} exactly
  CHECK(shape(p) == std::vector<std::vector<int>>{{0, 1, 3}, {2}});
  CHECK(validate_packing(inst, p).valid());
}

TEST_CASE("first_fit_vector with d=1 components matches first_fit") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 2 + static_cast<int>(rng() % 3);
    int n = 1 + static_cast<int>(rng() % 10);
    std::vector<Item> vit;
    std::vector<Rational> sizes;
    for (int i = 0; i < n; ++i) {
      Rational s = rat(static_cast<long long>(rng() % 17), 16);
      sizes.push_back(s);
      vit.push_back({i, s, std::nullopt, std::nullopt, {s}});
    }
    Instance vinst = make_instance(std::move(vit), k, std::nullopt, 1);
    Instance sinst = from_sizes(std::move(sizes), k);
    CHECK(shape(first_fit_vector(vinst)) == shape(first_fit(sinst)));
  }
}

TEST_CASE("first_fit_vector requires components") {
  Instance inst = from_sizes({rat(1, 2)}, 2);
  CHECK_THROWS_AS(first_fit_vector(inst), std::invalid_argument);
}
