#include "ccbp/generators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ccbp/algorithms.hpp"
#include "ccbp/exact.hpp"

namespace ccbp {

namespace {

constexpr std::pair<ScenarioKind, const char*> kKindNames[] = {
    {ScenarioKind::poc_general, "poc_general"},
    {ScenarioKind::poc_parametric, "poc_parametric"},
    {ScenarioKind::batched, "batched"},
    {ScenarioKind::batched_halves, "batched_halves"},
    {ScenarioKind::nf_lower, "nf_lower"},
    {ScenarioKind::wf_lower, "wf_lower"},
    {ScenarioKind::wf_k2_lower, "wf_k2_lower"},
    {ScenarioKind::beta04_lower, "beta04_lower"},
    {ScenarioKind::beta041_lower, "beta041_lower"},
    {ScenarioKind::ff_param_lower, "ff_param_lower"},
    {ScenarioKind::vp_poc_lower, "vp_poc_lower"},
};

constexpr std::pair<Procedure, const char*> kProcNames[] = {
    {Procedure::next_fit, "next_fit"},
    {Procedure::worst_fit, "worst_fit"},
    {Procedure::first_fit, "first_fit"},
    {Procedure::first_fit_vector, "first_fit_vector"},
    {Procedure::clustered, "clustered"},
    {Procedure::batched, "batched"},
};

void need(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

BigInt ipow(long long base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Largest 1/2^m strictly below bound (bound > 0).
Rational dyadic_below(const Rational& bound) {
  BigInt p = 1;
  while (Rational(BigInt(1), p) >= bound) p <<= 1;
  return Rational(BigInt(1), p);
}

int t_of(const Rational& beta) {
  return static_cast<int>(to_ll(floor_rat(Rational(denominator(beta), numerator(beta)))));
}

struct Builder {
  std::vector<Item> items;

  int add(Rational size, std::optional<int> cluster = std::nullopt,
          std::optional<int> batch = std::nullopt) {
    Item it;
    it.id = static_cast<int>(items.size());
    it.size = std::move(size);
    it.cluster = cluster;
    it.batch = batch;
    int id = it.id;
    items.push_back(std::move(it));
    return id;
  }

  int add_vector(std::vector<Rational> comps, std::optional<int> cluster = std::nullopt) {
    Item it;
    it.id = static_cast<int>(items.size());
    it.size = comps.at(0);
    it.components = std::move(comps);
    it.cluster = cluster;
    int id = it.id;
    items.push_back(std::move(it));
    return id;
  }
};

void require_valid_reference(const Instance& inst, const Packing& ref) {
  ValidityReport rep = validate_packing(inst, ref);
  if (!rep.valid())
    throw std::logic_error("generated reference packing invalid: " + rep.summary());
}

// The static bounds must already match the reference cost; generators built
// to be certified this way treat a mismatch as a construction bug.
OptCertificate certify_exact(const Instance& inst, Packing ref) {
  require_valid_reference(inst, ref);
  LowerBounds lb = lower_bounds(inst);
  OptCertificate cert = make_certificate(std::move(ref), lb);
  if (!cert.exact)
    throw std::logic_error("generated certificate is not exact: " +
                           std::to_string(cert.cost()) + " bins vs lower bound " +
                           std::to_string(cert.lower));
  return cert;
}

// Static bounds first; failing that, a full search when the instance is
// small enough to finish one. Otherwise the certificate is honestly inexact.
OptCertificate certify_flexible(const Instance& inst, Packing ref,
                                std::size_t exhaustive_limit = 24) {
  require_valid_reference(inst, ref);
  LowerBounds lb = lower_bounds(inst);
  if (lb.value == ref.cost()) return make_certificate(std::move(ref), lb);
  if (inst.size() <= exhaustive_limit) {
    OptCertificate solved = optimal(inst);
    if (solved.cost() < ref.cost())
      throw std::invalid_argument("reference packing is not optimal for the instance");
    OptCertificate cert;
    cert.upper = std::move(ref);
    cert.lower = solved.lower;
    cert.lower_kind = solved.lower_kind;
    cert.exact = cert.lower == cert.upper.cost();
    return cert;
  }
  return make_certificate(std::move(ref), lb);
}

}  // namespace

std::string kind_name(ScenarioKind kind) {
  for (const auto& [k, n] : kKindNames)
    if (k == kind) return n;
  throw std::logic_error("unnamed scenario kind");
}

ScenarioKind parse_kind(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  throw std::invalid_argument("unknown scenario kind '" + name + "'");
}

std::string procedure_name(Procedure proc) {
  for (const auto& [p, n] : kProcNames)
    if (p == proc) return n;
  throw std::logic_error("unnamed procedure");
}

Procedure parse_procedure(const std::string& name) {
  for (const auto& [p, n] : kProcNames)
    if (name == n) return p;
  throw std::invalid_argument("unknown procedure '" + name + "'");
}

GeneratedScenario gen_poc_general(int k, int N, std::optional<Rational> beta) {
  need(k >= 2, "gen_poc_general requires k >= 2");
  need(N > k, "gen_poc_general requires N > k");
  if (beta) {
    need(*beta > rat(1, 2) && *beta <= 1,
         "gen_poc_general beta must satisfy floor(1/beta) = 1");
    need(Rational(N) * (*beta - rat(1, 2)) > 1,
         "gen_poc_general requires N * (beta - 1/2) > 1");
  }
  const BigInt S = ipow(N, 5);
  const long long P = static_cast<long long>(N) * (k + 1);
  const Rational half = rat(1, 2);
  auto plus_size = [&](long long i) { return half + Rational(BigInt(k) * i, S); };
  auto minus_size = [&](long long j) { return half - Rational(BigInt(k) * j, S); };

  Builder b;
  int cluster = 0;
  std::vector<int> small_ids;
  for (long long c = 0; c < static_cast<long long>(N) * (k - 2); ++c) {
    ++cluster;
    for (int j = 0; j <= k; ++j) small_ids.push_back(b.add(Rational(BigInt(1), S), cluster));
  }
  std::vector<int> plus_id(P + 2, -1), minus_id(P + 2, -1);
  for (long long i = 3; i <= P; ++i) {
    ++cluster;
    plus_id[i] = b.add(plus_size(i), cluster);
    minus_id[i - 1] = b.add(minus_size(i - 1), cluster);
  }
  ++cluster;
  plus_id[1] = b.add(plus_size(1), cluster);
  plus_id[2] = b.add(plus_size(2), cluster);
  minus_id[P + 1] = b.add(minus_size(P + 1), cluster);
  minus_id[P] = b.add(minus_size(P), cluster);

  Packing ref;
  std::size_t s = 0;
  for (long long i = 1; i <= P; ++i) {
    Bin bin;
    bin.item_ids.push_back(plus_id[i]);
    bin.item_ids.push_back(minus_id[i + 1]);
    for (int j = 0; j < k - 2; ++j) bin.item_ids.push_back(small_ids[s++]);
    ref.bins.push_back(std::move(bin));
  }

  GeneratedScenario sc;
  sc.kind = ScenarioKind::poc_general;
  sc.procedure = Procedure::clustered;
  sc.params.k = k;
  sc.params.N = N;
  sc.params.beta = beta;
  sc.instance = make_instance(std::move(b.items), k, beta);
  sc.opt = certify_exact(sc.instance, std::move(ref));
  sc.predicted_cost = 2 * (static_cast<long long>(N) * (2 * k - 1) - 1);
  sc.target_ratio = rat(4 * k - 2, k + 1);
  return sc;
}

GeneratedScenario gen_poc_parametric(int k, int t, int N, std::optional<Rational> beta) {
  need(k >= 2, "gen_poc_parametric requires k >= 2");
  need(t >= 2, "gen_poc_parametric requires t >= 2");
  need(N >= 1, "gen_poc_parametric requires N >= 1");
  Rational B = beta ? *beta : rat(1, t);
  need(B > 0 && B <= 1, "beta must lie in (0,1]");
  need(t_of(B) == t, "beta must satisfy floor(1/beta) = t");

  GeneratedScenario sc;
  sc.kind = ScenarioKind::poc_parametric;
  sc.procedure = Procedure::clustered;
  sc.params.k = k;
  sc.params.t = t;
  sc.params.N = N;
  sc.params.beta = B;

  if (t >= k) {
    // Identical items of size beta, k+1 per cluster: every cluster needs two
    // bins by the count limit while k of them share one optimal bin.
    Builder b;
    int cluster = 0;
    for (long long c = 0; c < static_cast<long long>(k) * N; ++c) {
      ++cluster;
      for (int j = 0; j <= k; ++j) b.add(B, cluster);
    }
    const long long n = static_cast<long long>(k) * (k + 1) * N;
    Packing ref;
    for (long long at = 0; at < n; at += k) {
      Bin bin;
      for (int j = 0; j < k; ++j) bin.item_ids.push_back(static_cast<int>(at + j));
      ref.bins.push_back(std::move(bin));
    }
    sc.instance = make_instance(std::move(b.items), k, B);
    sc.opt = certify_exact(sc.instance, std::move(ref));
    sc.predicted_cost = 2LL * k * N;
    sc.target_ratio = rat(2 * k, k + 1);
    return sc;
  }

  need(N > k, "gen_poc_parametric requires N > k when t < k");
  need(Rational(N) * (B - rat(1, t + 1)) > 1,
       "gen_poc_parametric requires N * (beta - 1/(t+1)) > 1");
  const BigInt S = ipow(N, 5);
  const long long P = static_cast<long long>(N) * (k + 1);
  const Rational base = rat(1, t + 1);
  auto plus_size = [&](long long i) { return base + Rational(BigInt(k) * i, S); };
  auto minus_size = [&](long long j) { return base - Rational(BigInt(k) * j, S); };

  Builder b;
  int cluster = 0;
  std::vector<int> small_ids;
  for (long long c = 0; c < static_cast<long long>(N) * (k - t - 1); ++c) {
    ++cluster;
    for (int j = 0; j <= k; ++j) small_ids.push_back(b.add(Rational(BigInt(1), S), cluster));
  }
  std::vector<int> plateau_ids;
  std::vector<int> plus_id(P + 2, -1), minus_id(P + 2, -1);
  for (long long i = 3; i <= P; ++i) {
    ++cluster;
    for (int j = 0; j < t - 1; ++j) plateau_ids.push_back(b.add(base, cluster));
    plus_id[i] = b.add(plus_size(i), cluster);
    minus_id[i - 1] = b.add(minus_size(i - 1), cluster);
  }
  ++cluster;
  plus_id[1] = b.add(plus_size(1), cluster);
  plus_id[2] = b.add(plus_size(2), cluster);
  minus_id[P + 1] = b.add(minus_size(P + 1), cluster);
  minus_id[P] = b.add(minus_size(P), cluster);
  for (int j = 0; j < 2 * (t - 1); ++j) plateau_ids.push_back(b.add(base, cluster));

  Packing ref;
  std::size_t s = 0, pl = 0;
  for (long long i = 1; i <= P; ++i) {
    Bin bin;
    bin.item_ids.push_back(plus_id[i]);
    bin.item_ids.push_back(minus_id[i + 1]);
    for (int j = 0; j < t - 1; ++j) bin.item_ids.push_back(plateau_ids[pl++]);
    for (int j = 0; j < k - t - 1; ++j) bin.item_ids.push_back(small_ids[s++]);
    ref.bins.push_back(std::move(bin));
  }

  sc.instance = make_instance(std::move(b.items), k, B);
  sc.opt = certify_exact(sc.instance, std::move(ref));
  sc.predicted_cost = 2 * (static_cast<long long>(N) * (2 * k - t) - 1);
  sc.target_ratio = rat(4 * k - 2 * t, k + 1);
  return sc;
}

GeneratedScenario gen_batched(int k, int N, int q) {
  need(k >= 2, "gen_batched requires k >= 2");
  need(q == 2 || q == 3, "gen_batched requires q in {2,3}");
  need(N >= 1 && N % (2 * k) == 0, "gen_batched requires 2k | N");

  Builder b;
  std::vector<int> bigs, zeros, meds;
  long long predicted = 0;
  if (q == 2) {
    for (int i = 0; i < N; ++i) bigs.push_back(b.add(rat(11, 20), std::nullopt, 1));
    for (long long i = 0; i < static_cast<long long>(k - 1) * N; ++i)
      zeros.push_back(b.add(Rational(0), std::nullopt, 2));
    predicted = N + static_cast<long long>(k - 1) * N / k;
  } else {
    int med_batch = k > 2 ? 3 : 2;  // the zero batch vanishes at k = 2
    for (int i = 0; i < N; ++i) bigs.push_back(b.add(rat(11, 20), std::nullopt, 1));
    for (long long i = 0; i < static_cast<long long>(k - 2) * N; ++i)
      zeros.push_back(b.add(Rational(0), std::nullopt, 2));
    for (int i = 0; i < N; ++i) meds.push_back(b.add(rat(2, 5), std::nullopt, med_batch));
    predicted = N + static_cast<long long>(k - 2) * N / k + N / 2;
  }

  Packing ref;
  std::size_t z = 0;
  for (int i = 0; i < N; ++i) {
    Bin bin;
    bin.item_ids.push_back(bigs[i]);
    if (q == 3) bin.item_ids.push_back(meds[i]);
    int fill = q == 2 ? k - 1 : k - 2;
    for (int j = 0; j < fill; ++j) bin.item_ids.push_back(zeros[z++]);
    ref.bins.push_back(std::move(bin));
  }

  GeneratedScenario sc;
  sc.kind = ScenarioKind::batched;
  sc.procedure = Procedure::batched;
  sc.params.k = k;
  sc.params.N = N;
  sc.params.q = q;
  sc.instance = make_instance(std::move(b.items), k);
  sc.opt = certify_exact(sc.instance, std::move(ref));
  sc.predicted_cost = predicted;
  sc.target_ratio = q == 2 ? rat(2 * k - 1, k) : rat(5 * k - 4, 2 * k);
  return sc;
}

GeneratedScenario gen_batched_halves(int q) {
  need(q >= 1, "gen_batched_halves requires q >= 1");
  Builder b;
  for (int i = 0; i < q; ++i) b.add(rat(1, 2), std::nullopt, i + 1);
  Packing ref;
  for (int i = 0; i < q; i += 2) {
    Bin bin;
    bin.item_ids.push_back(i);
    if (i + 1 < q) bin.item_ids.push_back(i + 1);
    ref.bins.push_back(std::move(bin));
  }
  GeneratedScenario sc;
  sc.kind = ScenarioKind::batched_halves;
  sc.procedure = Procedure::batched;
  sc.params.k = 2;
  sc.params.q = q;
  sc.instance = make_instance(std::move(b.items), 2);
  sc.opt = certify_exact(sc.instance, std::move(ref));
  sc.predicted_cost = q;
  sc.target_ratio = rat(3, 2);
  return sc;
}

GeneratedScenario gen_nf_lower(int k, int N, std::optional<Rational> eps) {
  need(k >= 2, "gen_nf_lower requires k >= 2");
  need(N >= 4, "gen_nf_lower requires N >= 4");
  need(N % k == 0, "gen_nf_lower requires k | N");
  const Rational bound = rat(1, 10LL * N);
  const Rational e = eps ? *eps : dyadic_below(bound);
  need(e > 0 && e < bound, "gen_nf_lower requires eps in (0, 1/(10N))");
  const Rational half = rat(1, 2);

  Builder b;
  std::vector<int> small_ids;
  for (long long i = 0; i < static_cast<long long>(N) * (k - 2); ++i)
    small_ids.push_back(b.add(e / k));
  // Alternating run: sizes 1/2 + q*eps and 1/2 - p*eps with q descending
  // N..3 against p descending N-2..1, closed by a final 1/2 + 2*eps. Each
  // arrival overflows the previous one by eps or 2*eps, so the single
  // active bin closes on every item.
  std::vector<int> large_by_q(N + 1, -1), med_by_p(std::max(N - 1, 2), -1);
  for (int i = 1; i <= N - 2; ++i) {
    int qv = N + 1 - i;
    large_by_q[qv] = b.add(half + qv * e);
    int pv = N - 1 - i;
    med_by_p[pv] = b.add(half - pv * e);
  }
  large_by_q[2] = b.add(half + 2 * e);

  Packing ref;
  std::size_t s = 0;
  auto fill_smalls = [&](Bin& bin) {
    for (int j = 0; j < k - 2; ++j) bin.item_ids.push_back(small_ids[s++]);
  };
  for (int i = 1; i <= N - 4; ++i) {
    Bin bin;
    bin.item_ids = {large_by_q[i + 1], med_by_p[i + 2]};
    fill_smalls(bin);
    ref.bins.push_back(std::move(bin));
  }
  for (int qv : {N - 2, N - 1, N}) {
    Bin bin;
    bin.item_ids = {large_by_q[qv]};
    fill_smalls(bin);
    ref.bins.push_back(std::move(bin));
  }
  Bin last;
  last.item_ids = {med_by_p[1], med_by_p[2]};
  fill_smalls(last);
  ref.bins.push_back(std::move(last));

  GeneratedScenario sc;
  sc.kind = ScenarioKind::nf_lower;
  sc.procedure = Procedure::next_fit;
  sc.params.k = k;
  sc.params.N = N;
  sc.params.eps = e;
  sc.instance = make_instance(std::move(b.items), k);
  sc.opt = certify_flexible(sc.instance, std::move(ref));
  sc.predicted_cost = static_cast<long long>(N) * (k - 2) / k + 2LL * N - 3;
  sc.target_ratio = rat(3 * k - 2, k);
  return sc;
}

GeneratedScenario gen_wf_lower(int k, int N, std::optional<Rational> eps) {
  need(k >= 3, "gen_wf_lower requires k >= 3");
  need(N >= 2, "gen_wf_lower requires N >= 2");
  need(N % k == 0, "gen_wf_lower requires k | N");
  const Rational bound = rat(1, 10LL * N);
  const Rational e = eps ? *eps : dyadic_below(bound);
  need(e > 0 && e < bound, "gen_wf_lower requires eps in (0, 1/(10N))");
  const Rational half = rat(1, 2);
  const Rational delta = e / Rational(BigInt(1) << (N + 4));

  Builder b;
  std::vector<int> small_ids;
  for (long long i = 0; i < static_cast<long long>(N) * (k - 3); ++i)
    small_ids.push_back(b.add(delta / k));
  // Pair i leaves the minimum-load bin at 1/2 + eps/(3*2^(i-1)), which
  // rejects every later 1/2 - eps/2^j; the closing 1/2 + delta items then
  // reject each other.
  std::vector<int> large_ids(N + 1, -1), med_ids(N + 1, -1);
  for (int i = 1; i <= N; ++i) {
    Rational step = e / Rational(BigInt(1) << i);
    large_ids[i] = b.add(half - step);
    med_ids[i] = b.add(step * rat(5, 3));
  }
  std::vector<int> huge_ids;
  for (int i = 0; i < N - 1; ++i) huge_ids.push_back(b.add(half + delta));

  Packing ref;
  std::size_t s = 0;
  for (int i = 1; i <= N - 1; ++i) {
    Bin bin;
    bin.item_ids = {huge_ids[i - 1], large_ids[i], med_ids[i + 1]};
    for (int j = 0; j < k - 3; ++j) bin.item_ids.push_back(small_ids[s++]);
    ref.bins.push_back(std::move(bin));
  }
  Bin lastbin;
  lastbin.item_ids = {large_ids[N], med_ids[1]};
  for (int j = 0; j < k - 3; ++j) lastbin.item_ids.push_back(small_ids[s++]);
  ref.bins.push_back(std::move(lastbin));

  GeneratedScenario sc;
  sc.kind = ScenarioKind::wf_lower;
  sc.procedure = Procedure::worst_fit;
  sc.params.k = k;
  sc.params.N = N;
  sc.params.eps = e;
  sc.instance = make_instance(std::move(b.items), k);
  sc.opt = certify_exact(sc.instance, std::move(ref));
  sc.predicted_cost = static_cast<long long>(N) * (k - 3) / k + 2LL * N - 1;
  sc.target_ratio = rat(3 * k - 3, k);
  return sc;
}

GeneratedScenario gen_wf_k2_lower(int N) {
  need(N >= 1, "gen_wf_k2_lower requires N >= 1");
  Builder b;
  for (int i = 0; i < 2 * N; ++i) b.add(rat(2, 5));
  for (int i = 0; i < 2 * N; ++i) b.add(rat(3, 5));
  Packing ref;
  for (int i = 0; i < 2 * N; ++i) {
    Bin bin;
    bin.item_ids = {i, 2 * N + i};
    ref.bins.push_back(std::move(bin));
  }
  GeneratedScenario sc;
  sc.kind = ScenarioKind::wf_k2_lower;
  sc.procedure = Procedure::worst_fit;
  sc.params.k = 2;
  sc.params.N = N;
  sc.instance = make_instance(std::move(b.items), 2);
  sc.opt = certify_exact(sc.instance, std::move(ref));
  sc.predicted_cost = 3LL * N;
  sc.target_ratio = rat(3, 2);
  return sc;
}

GeneratedScenario gen_beta04_lower(int k, int N, int M, std::optional<Rational> eps) {
  need(k >= 4, "gen_beta04_lower requires k >= 4");
  need(M >= 1, "gen_beta04_lower requires M >= 1");
  need(N >= 1 && N % k == 0, "gen_beta04_lower requires k | N");
  const BigInt three_M = ipow(3, M);
  const BigInt three_2M = three_M * three_M;
  const Rational cap = Rational(BigInt(1), BigInt(100) * three_2M);
  const Rational e = eps ? *eps : dyadic_below(cap);
  need(e > 0 && Rational(three_2M) * e < rat(1, 100),
       "gen_beta04_lower requires 3^(2M) * eps < 1/100");

  const BigInt delta_big = BigInt(N) * (three_M * 3 - 1) / 2;
  need(BigInt(k) * delta_big < (BigInt(1) << 26), "instance would be too large");
  const long long Delta = to_ll(delta_big);
  const long long Zn = static_cast<long long>(k - 4) * Delta +
                       static_cast<long long>(N) * (to_ll(three_M) + 1);

  Builder b;
  std::vector<int> zero_ids;
  for (long long i = 0; i < Zn; ++i) zero_ids.push_back(b.add(Rational(0)));
  // Pair block j: items 2/5 - 3^(2j-1)*eps and 1/5 + 3^(2j)*eps; three of
  // the latter plus the next block's former fill a bin to exactly 1.
  std::vector<std::vector<int>> fours(M + 1), twos(M + 1);
  long long pair_count = 0;
  for (int j = M; j >= 0; --j) {
    long long cj = to_ll(j >= 1 ? BigInt(N) * ipow(3, M - j + 1) : BigInt(N) * three_M);
    pair_count += cj;
    Rational p_low = 2 * j - 1 >= 0 ? Rational(ipow(3, 2 * j - 1)) : rat(1, 3);
    Rational four = rat(2, 5) - p_low * e;
    Rational two = rat(1, 5) + Rational(ipow(3, 2 * j)) * e;
    for (long long c = 0; c < cj; ++c) {
      fours[j].push_back(b.add(four));
      twos[j].push_back(b.add(two));
    }
  }

  Packing ref;
  std::size_t z = 0;
  std::vector<std::size_t> fcur(M + 1, 0), tcur(M + 1, 0);
  auto take = [&](std::vector<std::vector<int>>& pool, std::vector<std::size_t>& cur, int j) {
    return pool[j][cur[j]++];
  };
  auto fill_zeros = [&](Bin& bin) {
    while (bin.count() < k) bin.item_ids.push_back(zero_ids[z++]);
  };
  for (int i = 0; i < N; ++i) {
    Bin bin;
    for (int r = 0; r < 3; ++r) bin.item_ids.push_back(take(twos, tcur, M));
    fill_zeros(bin);
    ref.bins.push_back(std::move(bin));
  }
  for (int g = 1; g <= M - 1; ++g) {
    long long bins_g = to_ll(BigInt(N) * ipow(3, g));
    for (long long i = 0; i < bins_g; ++i) {
      Bin bin;
      for (int r = 0; r < 3; ++r) bin.item_ids.push_back(take(twos, tcur, M - g));
      bin.item_ids.push_back(take(fours, fcur, M - g + 1));
      fill_zeros(bin);
      ref.bins.push_back(std::move(bin));
    }
  }
  long long bins_last = to_ll(BigInt(N) * three_M);
  for (long long i = 0; i < bins_last; ++i) {
    Bin bin;
    bin.item_ids.push_back(take(twos, tcur, 0));
    bin.item_ids.push_back(take(fours, fcur, 0));
    bin.item_ids.push_back(take(fours, fcur, 1));
    fill_zeros(bin);
    ref.bins.push_back(std::move(bin));
  }
  for (int j = 0; j <= M; ++j)
    if (fcur[j] != fours[j].size() || tcur[j] != twos[j].size())
      throw std::logic_error("beta04 reference packing left items unused");
  if (z != zero_ids.size()) throw std::logic_error("beta04 zero accounting is off");

  GeneratedScenario sc;
  sc.kind = ScenarioKind::beta04_lower;
  sc.procedure = Procedure::next_fit;
  sc.params.k = k;
  sc.params.N = N;
  sc.params.M = M;
  sc.params.eps = e;
  sc.instance = make_instance(std::move(b.items), k, rat(2, 5));
  sc.opt = certify_exact(sc.instance, std::move(ref));
  sc.predicted_cost = Zn / k + pair_count;
  sc.target_ratio = rat(8 * k - 10, 3 * k);
  return sc;
}

GeneratedScenario gen_beta041_instance(int k, int N) {
  need(k >= 6, "gen_beta041_instance requires k >= 6");
  need(N >= 1 && N % k == 0, "gen_beta041_instance requires k | N");
  const Rational a41 = rat(41, 100), a4099 = rat(4099, 10000);
  const Rational a1801 = rat(1801, 10000), a1804 = rat(1804, 10000);
  const Rational a902 = rat(902, 10000);

  Builder b;
  std::vector<int> zeros, i41, i4099, i1801, i1804, i902;
  const long long Zn = static_cast<long long>(N) * (13 * k - 45);
  for (long long i = 0; i < Zn; ++i) zeros.push_back(b.add(Rational(0)));
  for (long long r = 0; r < 10LL * N; ++r) {
    i4099.push_back(b.add(a4099));
    i1804.push_back(b.add(a1804));
  }
  for (long long r = 0; r < N; ++r) {
    i4099.push_back(b.add(a4099));
    i902.push_back(b.add(a902));
    i902.push_back(b.add(a902));
  }
  for (long long r = 0; r < 11LL * N; ++r) {
    i41.push_back(b.add(a41));
    i1801.push_back(b.add(a1801));
  }

  Packing ref;
  std::size_t z = 0;
  for (long long i = 0; i < 11LL * N; ++i) {
    Bin bin;
    bin.item_ids = {i41[i], i4099[i], i1801[i]};
    for (int j = 0; j < k - 3; ++j) bin.item_ids.push_back(zeros[z++]);
    ref.bins.push_back(std::move(bin));
  }
  for (long long i = 0; i < 2LL * N; ++i) {
    Bin bin;
    for (int r = 0; r < 5; ++r) bin.item_ids.push_back(i1804[5 * i + r]);
    bin.item_ids.push_back(i902[i]);
    for (int j = 0; j < k - 6; ++j) bin.item_ids.push_back(zeros[z++]);
    ref.bins.push_back(std::move(bin));
  }
  if (z != zeros.size()) throw std::logic_error("beta041 zero accounting is off");

  GeneratedScenario sc;
  sc.kind = ScenarioKind::beta041_lower;
  sc.procedure = Procedure::worst_fit;
  sc.params.k = k;
  sc.params.N = N;
  sc.instance = make_instance(std::move(b.items), k, rat(41, 100));
  sc.opt = certify_exact(sc.instance, std::move(ref));
  sc.predicted_cost = Zn / k + 22LL * N;
  sc.target_ratio = rat(35 * k - 45, 13 * k);
  return sc;
}

CoreSequence mix_core(int k, int t, int N, const Rational& beta) {
  need(t >= 2 && k > t && N >= 1, "mix_core requires k > t >= 2, N >= 1");
  need(beta > rat(1, t + 1) && beta <= rat(1, t),
       "mix_core requires floor(1/beta) = t");
  // delta below 1/(t(t+1)(t+2)) keeps t+2 small items oversized for a bin
  // and big items out of full small bins; delta below (beta-1/(t+1))/2
  // keeps the big items under beta.
  Rational d1 = (beta - rat(1, t + 1)) / 2;
  Rational d2 = rat(1, 2LL * t * (t + 1) * (t + 2));
  Rational delta = std::min(d1, d2);
  Rational small = rat(1, t + 1) - t * delta;
  Rational big = rat(1, t + 1) + delta;

  CoreSequence cs;
  for (int i = 0; i < N; ++i) cs.sizes.push_back(small);
  for (long long i = 0; i < static_cast<long long>(t) * N; ++i) cs.sizes.push_back(big);
  for (int i = 0; i < N; ++i) {
    std::vector<int> bin{i};
    for (int j = 0; j < t; ++j) bin.push_back(N + t * i + j);
    cs.opt_bins.push_back(std::move(bin));
  }
  long long r = N % (t + 1);
  long long small_bins = (N + t) / (t + 1);
  long long absorbed = r > 0 ? std::min<long long>(t + 1 - r, static_cast<long long>(t) * N) : 0;
  long long rem = static_cast<long long>(t) * N - absorbed;
  cs.ff_cost = small_bins + (rem + t - 1) / t;
  return cs;
}

GeneratedScenario gen_ff_param_lower(int k, int t, int N, const CorePlugin& core,
                                     std::optional<Rational> beta) {
  need(t >= 2, "gen_ff_param_lower requires t >= 2");
  need(k > t, "gen_ff_param_lower requires k > t");
  need(N >= 1 && N % k == 0, "gen_ff_param_lower requires k | N");
  Rational B = beta ? *beta : rat(1, t);
  need(B > 0 && B <= 1 && t_of(B) == t, "beta must satisfy floor(1/beta) = t");

  CoreSequence cs = core ? core(k, t, N, B) : mix_core(k, t, N, B);
  const int m = static_cast<int>(cs.sizes.size());
  need(m > 0, "core must provide items");
  for (const Rational& s : cs.sizes)
    need(s >= 0 && s <= B, "core sizes must lie in [0, beta]");
  need(static_cast<int>(cs.opt_bins.size()) == N, "core opt_bins must form N bins");
  std::vector<char> seen(m, 0);
  for (const auto& bin : cs.opt_bins) {
    need(!bin.empty(), "core opt_bins must be non-empty");
    for (int idx : bin) {
      need(idx >= 0 && idx < m, "core opt_bins index out of range");
      need(!seen[idx], "core opt_bins reuse an item");
      seen[idx] = 1;
    }
  }
  for (int i = 0; i < m; ++i) need(seen[i], "core opt_bins must cover every item");
  {
    Builder cb;
    for (const Rational& s : cs.sizes) cb.add(s);
    Instance ci = make_instance(std::move(cb.items), k, B);
    need(first_fit(ci).cost() == cs.ff_cost,
         "core ff_cost disagrees with the greedy simulation");
  }

  const long long Zn = static_cast<long long>(N) * (k - t - 1);
  Builder b;
  std::vector<int> zero_ids;
  for (long long i = 0; i < Zn; ++i) zero_ids.push_back(b.add(Rational(0)));
  const int base = static_cast<int>(b.items.size());
  for (const Rational& s : cs.sizes) b.add(s);

  Packing ref;
  for (const auto& bin : cs.opt_bins) {
    Bin out;
    for (int idx : bin) out.item_ids.push_back(base + idx);
    ref.bins.push_back(std::move(out));
  }
  std::size_t z = 0;
  for (Bin& bin : ref.bins)
    while (bin.count() < k && z < zero_ids.size()) bin.item_ids.push_back(zero_ids[z++]);
  need(z == zero_ids.size(), "zero items exceed the reference packing capacity");

  GeneratedScenario sc;
  sc.kind = ScenarioKind::ff_param_lower;
  sc.procedure = Procedure::first_fit;
  sc.params.k = k;
  sc.params.t = t;
  sc.params.N = N;
  sc.params.beta = B;
  sc.instance = make_instance(std::move(b.items), k, B);
  sc.opt = certify_flexible(sc.instance, std::move(ref));
  sc.predicted_cost = Zn / k + cs.ff_cost;
  sc.target_ratio = rat(static_cast<long long>(k) * t + static_cast<long long>(k - t) * (t + 1),
                        static_cast<long long>(k) * t);
  return sc;
}

GeneratedScenario gen_vp_poc_lower(int d, int N) {
  need(d >= 1, "gen_vp_poc_lower requires d >= 1");
  need(N >= 3, "gen_vp_poc_lower requires N >= 3");
  const int k = d * N;
  const Rational unit = rat(1, N);

  Builder b;
  int cluster = 0;
  for (int c = 0; c < d; ++c) {
    for (int rep = 0; rep < N; ++rep) {
      ++cluster;
      for (int j = 0; j <= N; ++j) {
        if (d == 1) {
          b.add(unit, cluster);
        } else {
          std::vector<Rational> comps(d, Rational(0));
          comps[c] = unit;
          b.add_vector(std::move(comps), cluster);
        }
      }
    }
  }

  Packing ref;
  for (int j = 0; j <= N; ++j) {
    Bin bin;
    for (int cl = 0; cl < d * N; ++cl) bin.item_ids.push_back(cl * (N + 1) + j);
    ref.bins.push_back(std::move(bin));
  }

  GeneratedScenario sc;
  sc.kind = ScenarioKind::vp_poc_lower;
  sc.procedure = Procedure::clustered;
  sc.params.k = k;
  sc.params.N = N;
  sc.params.d = d;
  sc.instance = make_instance(std::move(b.items), k,
                              d == 1 ? std::optional<Rational>(unit) : std::nullopt, d);
  sc.opt = certify_exact(sc.instance, std::move(ref));
  sc.predicted_cost = 2LL * d * N;
  sc.target_ratio = Rational(2 * d);
  return sc;
}

namespace {

LowerKind parse_lower_kind(const std::string& name) {
  for (LowerKind k : {LowerKind::size_bound, LowerKind::cardinality_bound,
                      LowerKind::big_item_bound, LowerKind::exhaustive})
    if (lower_kind_name(k) == name) return k;
  throw ParseError("unknown lower bound kind '" + name + "'");
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t z = s.find_last_not_of(" \t\r");
  return s.substr(a, z - a + 1);
}

long long parse_int_field(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("scenario field '" + key + "' has malformed integer '" + value + "'");
  }
}

Rational parse_rat_field(const std::string& key, const std::string& value) {
  try {
    return parse_rational(value);
  } catch (const std::invalid_argument&) {
    throw ParseError("scenario field '" + key + "' has malformed rational '" + value + "'");
  }
}

}  // namespace

std::string serialize_scenario(const GeneratedScenario& sc) {
  std::ostringstream out;
  out << serialize_instance(sc.instance);
  out << "--- scenario\n";
  out << "kind=" << kind_name(sc.kind) << "\n";
  out << "procedure=" << procedure_name(sc.procedure) << "\n";
  out << "k=" << sc.params.k << "\n";
  out << "t=" << sc.params.t << "\n";
  out << "N=" << sc.params.N << "\n";
  out << "M=" << sc.params.M << "\n";
  out << "q=" << sc.params.q << "\n";
  out << "d=" << sc.params.d << "\n";
  if (sc.params.beta) out << "beta=" << ccbp::to_string(*sc.params.beta) << "\n";
  if (sc.params.eps) out << "eps=" << ccbp::to_string(*sc.params.eps) << "\n";
  out << "predicted=" << sc.predicted_cost << "\n";
  out << "target=" << ccbp::to_string(sc.target_ratio) << "\n";
  out << "lower=" << sc.opt.lower << "\n";
  out << "lower_kind=" << lower_kind_name(sc.opt.lower_kind) << "\n";
  out << "exact=" << (sc.opt.exact ? 1 : 0) << "\n";
  for (const Bin& bin : sc.opt.upper.bins) {
    out << "optbin";
    for (int id : bin.item_ids) out << ' ' << id;
    out << "\n";
  }
  return out.str();
}

GeneratedScenario parse_scenario(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string instance_text;
  bool found = false;
  std::vector<std::string> tail;
  while (std::getline(in, line)) {
    if (trim(line) == "--- scenario") {
      found = true;
      continue;
    }
    if (!found) {
      instance_text += line;
      instance_text += '\n';
    } else {
      tail.push_back(line);
    }
  }
  if (!found) throw ParseError("missing '--- scenario' section");

  GeneratedScenario sc;
  sc.instance = parse_instance(instance_text);

  bool have_kind = false, have_proc = false, have_pred = false, have_target = false;
  bool have_lower = false, have_lkind = false, have_exact = false;
  long long lower = 0;
  bool exact = false;
  LowerKind lkind = LowerKind::size_bound;
  Packing upper;

  for (const std::string& raw : tail) {
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("optbin", 0) == 0) {
      std::istringstream bs(s.substr(6));
      Bin bin;
      long long id;
      while (bs >> id) bin.item_ids.push_back(static_cast<int>(id));
      if (!bs.eof()) throw ParseError("malformed optbin line: '" + s + "'");
      if (bin.item_ids.empty()) throw ParseError("empty optbin line");
      upper.bins.push_back(std::move(bin));
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("malformed scenario line: '" + s + "'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key == "kind") {
      try {
        sc.kind = parse_kind(value);
      } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
      }
      have_kind = true;
    } else if (key == "procedure") {
      try {
        sc.procedure = parse_procedure(value);
      } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
      }
      have_proc = true;
    } else if (key == "k") {
      sc.params.k = static_cast<int>(parse_int_field(key, value));
    } else if (key == "t") {
      sc.params.t = static_cast<int>(parse_int_field(key, value));
    } else if (key == "N") {
      sc.params.N = static_cast<int>(parse_int_field(key, value));
    } else if (key == "M") {
      sc.params.M = static_cast<int>(parse_int_field(key, value));
    } else if (key == "q") {
      sc.params.q = static_cast<int>(parse_int_field(key, value));
    } else if (key == "d") {
      sc.params.d = static_cast<int>(parse_int_field(key, value));
    } else if (key == "beta") {
      sc.params.beta = parse_rat_field(key, value);
    } else if (key == "eps") {
      sc.params.eps = parse_rat_field(key, value);
    } else if (key == "predicted") {
      sc.predicted_cost = parse_int_field(key, value);
      have_pred = true;
    } else if (key == "target") {
      sc.target_ratio = parse_rat_field(key, value);
      have_target = true;
    } else if (key == "lower") {
      lower = parse_int_field(key, value);
      have_lower = true;
    } else if (key == "lower_kind") {
      lkind = parse_lower_kind(value);
      have_lkind = true;
    } else if (key == "exact") {
      long long v = parse_int_field(key, value);
      if (v != 0 && v != 1) throw ParseError("scenario field 'exact' must be 0 or 1");
      exact = v == 1;
      have_exact = true;
    } else {
      throw ParseError("unknown scenario field '" + key + "'");
    }
  }
  if (!have_kind || !have_proc || !have_pred || !have_target || !have_lower ||
      !have_lkind || !have_exact)
    throw ParseError("scenario section is missing required fields");
  if (upper.bins.empty()) throw ParseError("scenario has no optbin lines");

  ValidityReport rep = validate_packing(sc.instance, upper);
  if (!rep.valid())
    throw ParseError("scenario reference packing is invalid: " + rep.summary());
  if (exact != (upper.cost() == lower))
    throw ParseError("scenario exactness flag contradicts lower bound and bin count");

  sc.opt.upper = std::move(upper);
  sc.opt.lower = lower;
  sc.opt.lower_kind = lkind;
  sc.opt.exact = exact;
  return sc;
}

}  // namespace ccbp
