// Acceptance battery: ten criteria, one PASS/FAIL line each, exit code is
// the number of failures. Every numeric comparison is exact rational
// arithmetic; no tolerance windows are involved.
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <string>

#include "ccbp/algorithms.hpp"
#include "ccbp/analysis.hpp"
#include "ccbp/exact.hpp"
#include "ccbp/generators.hpp"
#include "ccbp/harness.hpp"

using namespace ccbp;

namespace {

int failures = 0;

void criterion(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", idx, name, detail.c_str());
  if (!ok) ++failures;
}

template <typename F>
void guarded(int idx, const char* name, F&& body) {
  try {
    body();
  } catch (const std::exception& ex) {
    criterion(idx, name, false, std::string("exception: ") + ex.what());
  }
}

bool cluster_weight_checks(const GeneratedScenario& sc, const WeightFunction& w,
                           std::string& why) {
  for (const Instance& part : split_by_cluster(sc.instance)) {
    Packing ff = first_fit(part);
    WeightReport c = check_ceiling(part, ff, w);
    WeightReport f = check_floor(part, ff, w);
    if (!c.pass || !f.pass) {
      why = !c.pass ? c.detail : f.detail;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  // 1: clustering overhead, arbitrary sizes
  guarded(1, "clustering overhead", [] {
    GeneratedScenario sc = gen_poc_general(3, 10);
    ClusteredReport rep = clustered_cost(sc.instance);
    bool ok = rep.total == 98 && sc.opt.cost() == 40 && sc.opt.exact &&
              rat(98, 40) == rat(49, 20);
    Rational prev(0);
    std::string why;
    for (int N = 4; N <= 40 && ok; ++N) {
      GeneratedScenario g = gen_poc_general(3, N);
      Rational ratio = Rational(g.predicted_cost) / Rational(g.opt.cost());
      long long sim = clustered_cost(g.instance).total;
      if (sim != g.predicted_cost || !g.opt.exact ||
          ratio != rat(10 * N - 2, 4 * N) || ratio <= prev || ratio >= rat(5, 2)) {
        ok = false;
        why = " monotone sweep broke at N=" + std::to_string(N);
      }
      prev = ratio;
    }
    criterion(1, "clustering overhead", ok,
              "k=3 N=10 gives 98 over 40 = 49/20; N=4..40 climbs toward 5/2" + why);
  });

  // 2: clustering overhead, parametric sizes
  guarded(2, "parametric clustering overhead", [] {
    GeneratedScenario flat = gen_poc_parametric(2, 3, 1);
    GeneratedScenario steep = gen_poc_parametric(4, 2, 16, rat(2, 5));
    bool ok1 = clustered_cost(flat.instance).total == 4 && flat.opt.cost() == 3 &&
               flat.opt.exact && rat(4, 3) == rat(2 * 2, 2 + 1);
    bool ok2 = clustered_cost(steep.instance).total == 190 &&
               steep.opt.cost() == 80 && steep.opt.exact &&
               rat(190, 80) == rat(19, 8);
    criterion(2, "parametric clustering overhead", ok1 && ok2,
              "k=2 t=3 N=1 gives 4/3 exactly; k=4 t=2 beta=2/5 N=16 gives 19/8");
  });

  // 3: clustering upper bound via weights plus randomized search
  guarded(3, "clustering upper bound", [] {
    bool ok = true;
    std::string why;
    for (int k = 2; k <= 4 && ok; ++k) {
      WeightFunction w = make_weight("poc_general", k);
      for (int N = k + 2; N <= k + 6 && ok; ++N)
        ok = cluster_weight_checks(gen_poc_general(k, N), w, why);
    }
    if (ok) {
      WeightFunction wp = make_weight("poc_param", 4, 2);
      ok = cluster_weight_checks(gen_poc_parametric(4, 2, 16, rat(2, 5)), wp, why);
    }
    FuzzReport fz = fuzz(1, 1000, 12, 2, 6);
    std::ostringstream oss;
    oss << "zero-slack cluster weights hold; " << fz.runs << " seeded runs, "
        << fz.checks << " checks, " << fz.violations.size() << " violations";
    criterion(3, "clustering upper bound", ok && fz.pass(), oss.str() + why);
  });

  // 4: batch separation, exact ratios and the rebuild bound
  guarded(4, "batch separation", [] {
    GeneratedScenario q2 = gen_batched(4, 8, 2);
    GeneratedScenario q3 = gen_batched(4, 8, 3);
    bool ok = batched_cost(q2.instance).total == 14 && q2.opt.cost() == 8 &&
              rat(14, 8) == rat(7, 4) && batched_cost(q3.instance).total == 16 &&
              q3.opt.cost() == 8 && rat(16, 8) == rat(2);

    Packing rp2 = repack_batched(q2.opt.upper, q2.instance, 2);
    ok = ok && validate_packing(q2.instance, rp2).valid() &&
         Rational(rp2.cost()) <= rat(7, 4) * 8 + 3;
    for (const Bin& b : rp2.bins)
      for (int id : b.item_ids)
        ok = ok && *q2.instance.item_by_id(id).batch ==
                       *q2.instance.item_by_id(b.item_ids[0]).batch;

    Packing rp3 = repack_batched(q3.opt.upper, q3.instance, 3);
    ok = ok && validate_packing(q3.instance, rp3).valid() &&
         Rational(rp3.cost()) <= rat(5, 2) * 8 - rat(2, 4) * 8 + 5;

    GeneratedScenario hv = gen_batched_halves(5);
    ok = ok && batched_cost(hv.instance).total == 5 && hv.opt.cost() == 3;
    std::ostringstream oss;
    oss << "k=4 N=8 ratios 7/4 and 2; rebuilds use " << rp2.cost() << " <= 17 and "
        << rp3.cost() << " <= 21 bins; five half batches cost 5 vs 3";
    criterion(4, "batch separation", ok, oss.str());
  });

  // 5: single-active-bin and lowest-load greedy lower bounds
  guarded(5, "greedy lower bounds", [] {
    GeneratedScenario nf_sc = gen_nf_lower(4, 8, rat(1, 100));
    GeneratedScenario wf_sc = gen_wf_lower(4, 8, rat(1, 100));
    GeneratedScenario k2 = gen_wf_k2_lower(2);
    Packing nf_p = next_fit(nf_sc.instance);
    Packing wf_p = worst_fit(wf_sc.instance);
    bool ok = nf_p.cost() == 17 && nf_sc.opt.cost() == 8 && nf_sc.opt.exact &&
              wf_p.cost() == 17 && wf_sc.opt.cost() == 8 && wf_sc.opt.exact &&
              worst_fit(k2.instance).cost() == 6 && k2.opt.cost() == 4;

    WeightFunction wn = make_weight("nf", 4);
    WeightFunction ww = make_weight("wf", 4);
    ok = ok && wn.floor_slack == rat(1) && ww.floor_slack == rat(1) &&
         check_ceiling(nf_sc.instance, nf_p, wn).pass &&
         check_floor(nf_sc.instance, nf_p, wn).pass &&
         check_ceiling(wf_sc.instance, wf_p, ww).pass &&
         check_floor(wf_sc.instance, wf_p, ww).pass;

    FuzzReport fz = fuzz(1, 1000, 12, 2, 6);
    std::ostringstream oss;
    oss << "17 vs 8 twice, 6 vs 4 at k=2; slack-1 weights hold; "
        << fz.violations.size() << " violations in " << fz.checks << " checks";
    criterion(5, "greedy lower bounds", ok && fz.pass(), oss.str());
  });

  // 6: sizes capped at 2/5 drive both greedies to the same count
  guarded(6, "two-fifths size cap", [] {
    GeneratedScenario sc = gen_beta04_lower(4, 4, 2);
    long long nf_cost = next_fit(sc.instance).cost();
    long long wf_cost = worst_fit(sc.instance).cost();
    bool ok = nf_cost == 94 && wf_cost == 94 && sc.opt.cost() == 52 &&
              sc.opt.exact && validate_packing(sc.instance, sc.opt.upper).valid() &&
              rat(nf_cost, sc.opt.cost()) >= rat(94, 52);
    std::ostringstream oss;
    oss << "both greedies use " << nf_cost << " bins against the certified " << 52;
    criterion(6, "two-fifths size cap", ok, oss.str());
  });

  // 7: sizes capped at 41/100 push the lowest-load greedy above 2.115
  guarded(7, "41-hundredths size cap", [] {
    GeneratedScenario sc = gen_beta041_instance(6, 6);
    long long wf_cost = worst_fit(sc.instance).cost();
    Rational ratio = rat(wf_cost, sc.opt.cost());
    bool ok = wf_cost == 165 && sc.opt.cost() == 78 && sc.opt.exact &&
              ratio == rat(55, 26) && ratio > rat(19, 9) &&
              ratio > rat(2115, 1000);
    criterion(7, "41-hundredths size cap", ok,
              "165 over 78 = 55/26, above both 19/9 and 2.115");
  });

  // 8: lowest-index greedy under a 1/t size cap
  guarded(8, "parametric lowest-index greedy", [] {
    FuzzReport fz = fuzz(2, 1000, 12, 3, 6, rat(2, 5));
    GeneratedScenario sc = gen_ff_param_lower(5, 2, 10);
    Packing ff = first_fit(sc.instance);
    long long zero_bins = 0;
    for (const Bin& b : ff.bins) {
      bool all_zero = true;
      for (int id : b.item_ids) all_zero &= sc.instance.item_by_id(id).size == 0;
      zero_bins += all_zero ? 1 : 0;
    }
    Rational achieved = rat(ff.cost(), sc.opt.cost());
    bool ok = fz.pass() && zero_bins == 10 * (5 - 2 - 1) / 5 && ff.cost() == 17 &&
              sc.opt.exact && achieved < sc.target_ratio;
    std::ostringstream oss;
    oss << "capped-size battery clean (" << fz.checks << " checks); "
        << zero_bins << " all-zero bins; achieved " << to_string(achieved)
        << " below the 19/10 target";
    criterion(8, "parametric lowest-index greedy", ok, oss.str());
  });

  // 9: vector instances
  guarded(9, "vector clustering overhead", [] {
    GeneratedScenario sc = gen_vp_poc_lower(2, 3);
    bool ok = clustered_cost(sc.instance).total == 12 && sc.opt.cost() == 4 &&
              sc.opt.exact && rat(12, 4) == rat(2 * 3 * 2, 3 + 1);
    Rational prev(0);
    std::string why;
    for (int N = 3; N <= 20 && ok; ++N) {
      GeneratedScenario g = gen_vp_poc_lower(2, N);
      Rational ratio = Rational(g.predicted_cost) / Rational(g.opt.cost());
      if (clustered_cost(g.instance).total != g.predicted_cost ||
          ratio != rat(4 * N, N + 1) || ratio <= prev || ratio >= rat(4)) {
        ok = false;
        why = " sweep broke at N=" + std::to_string(N);
      }
      prev = ratio;
    }
    FuzzReport fz = fuzz_vector(7, 400, 10, 3);
    std::ostringstream oss;
    oss << "d=2 N=3 gives 12 vs 4; N<=20 climbs toward 4; vector battery "
        << fz.violations.size() << " violations in " << fz.checks << " checks";
    criterion(9, "vector clustering overhead", ok && fz.pass(), oss.str() + why);
  });

  // 10: the search-based solver against the independent exhaustive one
  guarded(10, "solver oracle equivalence", [] {
    std::mt19937_64 rng(424242);
    int mismatches = 0;
    for (int trial = 0; trial < 500; ++trial) {
      int k = 2 + static_cast<int>(rng() % 3);
      int n = 1 + static_cast<int>(rng() % 8);
      std::vector<Item> items;
      for (int i = 0; i < n; ++i)
        items.push_back({i, rat(static_cast<long long>(rng() % 33), 32),
                         std::nullopt, std::nullopt, {}});
      Instance inst = make_instance(std::move(items), k);
      OptCertificate cert = optimal(inst);
      if (!cert.exact || cert.cost() != brute_force(inst) ||
          !validate_packing(inst, cert.upper).valid())
        ++mismatches;
    }
    std::ostringstream oss;
    oss << "500 instances, " << mismatches << " mismatches";
    criterion(10, "solver oracle equivalence", mismatches == 0, oss.str());
  });

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
