#include "ccbp/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ccbp/algorithms.hpp"
#include "ccbp/analysis.hpp"
#include "ccbp/exact.hpp"

namespace ccbp {

namespace {

Procedure designated(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::poc_general:
    case ScenarioKind::poc_parametric:
    case ScenarioKind::vp_poc_lower:
      return Procedure::clustered;
    case ScenarioKind::batched:
    case ScenarioKind::batched_halves:
      return Procedure::batched;
    case ScenarioKind::nf_lower:
    case ScenarioKind::beta04_lower:
      return Procedure::next_fit;
    case ScenarioKind::wf_lower:
    case ScenarioKind::wf_k2_lower:
    case ScenarioKind::beta041_lower:
      return Procedure::worst_fit;
    case ScenarioKind::ff_param_lower:
      return Procedure::first_fit;
  }
  throw std::logic_error("scenario kind without designated procedure");
}

std::string sanitize_cell(std::string s) {
  for (char& c : s) {
    if (c == ',') c = ';';
    if (c == '\n' || c == '\r' || c == '"') c = ' ';
  }
  return s;
}

std::string opt_rat_cell(const std::optional<Rational>& r) {
  return r ? to_string(*r) : std::string();
}

unsigned worker_count(std::size_t jobs) {
  unsigned hc = std::thread::hardware_concurrency();
  if (hc == 0) hc = 4;
  return static_cast<unsigned>(std::min<std::size_t>(hc, std::max<std::size_t>(jobs, 1)));
}

template <typename Fn>
void parallel_indexed(std::size_t jobs, Fn&& fn) {
  unsigned workers = worker_count(jobs);
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < jobs; i += workers) fn(i);
    });
  for (std::thread& th : pool) th.join();
}

double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

bool compatible(ScenarioKind kind, Procedure proc) {
  if (proc == designated(kind)) return true;
  // The sizes-below-2/5 construction drives the single-active-bin greedy and
  // the lowest-load greedy into the same trace, so both runs are meaningful.
  if (kind == ScenarioKind::beta04_lower && proc == Procedure::worst_fit) return true;
  return false;
}

GeneratedScenario make_scenario(ScenarioKind kind, const ScenarioParams& p) {
  switch (kind) {
    case ScenarioKind::poc_general:
      return gen_poc_general(p.k, p.N, p.beta);
    case ScenarioKind::poc_parametric:
      return gen_poc_parametric(p.k, p.t, p.N, p.beta);
    case ScenarioKind::batched:
      return gen_batched(p.k, p.N, p.q);
    case ScenarioKind::batched_halves:
      return gen_batched_halves(p.q);
    case ScenarioKind::nf_lower:
      return gen_nf_lower(p.k, p.N, p.eps);
    case ScenarioKind::wf_lower:
      return gen_wf_lower(p.k, p.N, p.eps);
    case ScenarioKind::wf_k2_lower:
      return gen_wf_k2_lower(p.N);
    case ScenarioKind::beta04_lower:
      return gen_beta04_lower(p.k, p.N, p.M, p.eps);
    case ScenarioKind::beta041_lower:
      return gen_beta041_instance(p.k, p.N);
    case ScenarioKind::ff_param_lower:
      return gen_ff_param_lower(p.k, p.t, p.N, {}, p.beta);
    case ScenarioKind::vp_poc_lower:
      return gen_vp_poc_lower(p.d, p.N);
  }
  throw std::invalid_argument("unknown scenario kind");
}

RunReport run(const GeneratedScenario& sc, Procedure proc) {
  if (!compatible(sc.kind, proc))
    throw std::invalid_argument("procedure '" + procedure_name(proc) +
                                "' is not compatible with scenario kind '" +
                                kind_name(sc.kind) + "'");
  RunReport rep;
  rep.kind = sc.kind;
  rep.procedure = proc;
  rep.params = sc.params;
  rep.target_ratio = sc.target_ratio;
  rep.predicted_cost = sc.predicted_cost;
  rep.opt_cost = sc.opt.cost();
  rep.opt_exact = sc.opt.exact;

  auto t0 = std::chrono::steady_clock::now();
  switch (proc) {
    case Procedure::next_fit:
    case Procedure::worst_fit:
    case Procedure::first_fit:
    case Procedure::first_fit_vector: {
      Packing p;
      if (proc == Procedure::next_fit) p = next_fit(sc.instance);
      else if (proc == Procedure::worst_fit) p = worst_fit(sc.instance);
      else if (proc == Procedure::first_fit) p = first_fit(sc.instance);
      else p = first_fit_vector(sc.instance);
      ValidityReport v = validate_packing(sc.instance, p);
      if (!v.valid())
        throw std::logic_error("greedy produced an invalid packing: " + v.summary());
      rep.measured_cost = p.cost();
      break;
    }
    case Procedure::clustered:
      rep.measured_cost = clustered_cost(sc.instance).total;
      break;
    case Procedure::batched:
      rep.measured_cost = batched_cost(sc.instance).total;
      break;
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.wallclock_seconds = std::chrono::duration<double>(t1 - t0).count();

  if (rep.opt_cost > 0) rep.ratio = rat(rep.measured_cost, rep.opt_cost);
  rep.prediction_match = rep.measured_cost == rep.predicted_cost;
  return rep;
}

RunReport run(const GeneratedScenario& sc) { return run(sc, sc.procedure); }

std::string sweep_csv(ScenarioKind kind, const std::vector<ScenarioParams>& grid,
                      std::optional<Procedure> proc) {
  static const char* kHeader =
      "kind,k,t,beta,N,M,eps,d,q,procedure,measured,opt,opt_exact,ratio_exact,"
      "ratio_dec,target_exact,predicted,match,error\n";

  auto params_cells = [](const ScenarioParams& p) {
    std::ostringstream o;
    o << p.k << ',' << p.t << ',' << opt_rat_cell(p.beta) << ',' << p.N << ','
      << p.M << ',' << opt_rat_cell(p.eps) << ',' << p.d << ',' << p.q;
    return o.str();
  };

  std::vector<std::string> rows(grid.size());
  parallel_indexed(grid.size(), [&](std::size_t i) {
    std::ostringstream o;
    try {
      GeneratedScenario sc = make_scenario(kind, grid[i]);
      RunReport rep = run(sc, proc ? *proc : sc.procedure);
      o << kind_name(kind) << ',' << params_cells(sc.params) << ','
        << procedure_name(rep.procedure) << ',' << rep.measured_cost << ','
        << rep.opt_cost << ',' << (rep.opt_exact ? 1 : 0) << ','
        << to_string(rep.ratio) << ',' << to_decimal(rep.ratio) << ','
        << to_string(rep.target_ratio) << ',' << rep.predicted_cost << ','
        << (rep.prediction_match ? 1 : 0) << ",\n";
    } catch (const std::exception& ex) {
      o << kind_name(kind) << ',' << params_cells(grid[i]) << ','
        << procedure_name(proc ? *proc : designated(kind))
        << ",,,,,,,,," << sanitize_cell(ex.what()) << "\n";
    }
    rows[i] = o.str();
  });

  std::string out = kHeader;
  for (const std::string& r : rows) out += r;
  return out;
}

namespace {

struct IterOut {
  int skipped = 0;
  long long checks = 0;
  std::vector<FuzzViolation> violations;
};

struct IterCtx {
  const Instance* inst;
  IterOut* out;

  void fail(std::string check, std::string detail) {
    out->violations.push_back({std::move(check), std::move(detail),
                               serialize_instance(*inst)});
  }
  void check(bool ok, const char* name, const std::string& detail) {
    ++out->checks;
    if (!ok) fail(name, detail);
  }
  void weight_checks(const std::string& family, int k, int t, const Packing& p,
                     bool with_floor) {
    WeightFunction w = make_weight(family, k, t);
    WeightReport c = check_ceiling(*inst, p, w);
    check(c.pass, (family + "_ceiling").c_str(), c.detail);
    if (with_floor) {
      WeightReport f = check_floor(*inst, p, w);
      check(f.pass, (family + "_floor").c_str(), f.detail);
    }
  }
};

// Contiguous 1..L relabeling of arbitrary positive labels, preserving order
// of label values.
void relabel_contiguous(std::vector<int>& labels) {
  std::vector<int> used = labels;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (int& l : labels)
    l = static_cast<int>(std::lower_bound(used.begin(), used.end(), l) - used.begin()) + 1;
}

std::string bound_detail(const char* alg, long long got, long long opt,
                         const Rational& limit) {
  std::ostringstream o;
  o << alg << " used " << got << " bins vs optimum " << opt << ", allowed "
    << to_string(limit);
  return o.str();
}

}  // namespace

FuzzReport fuzz(std::uint64_t seed, int count, int max_n, int k_lo, int k_hi,
                std::optional<Rational> beta) {
  if (count < 0 || max_n < 1 || k_lo < 2 || k_hi < k_lo)
    throw std::invalid_argument("fuzz requires count >= 0, max_n >= 1, 2 <= k_lo <= k_hi");
  if (beta && (*beta <= 0 || *beta > 1))
    throw std::invalid_argument("fuzz beta must lie in (0,1]");

  std::vector<IterOut> outs(static_cast<std::size_t>(count));
  auto iterate = [&](std::size_t i) {
    IterOut& out = outs[i];
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
    auto pick = [&](long long lo, long long hi) {
      return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    const int k = static_cast<int>(pick(k_lo, k_hi));
    const int n = static_cast<int>(pick(1, max_n));
    long long mmax = 64;
    if (beta) mmax = std::min<long long>(64, to_ll(floor_rat(*beta * 64)));

    std::vector<Item> items(n);
    for (int j = 0; j < n; ++j) {
      items[j].id = j;
      items[j].size = rat(pick(0, mmax), 64);
    }
    Instance inst = make_instance(items, k, beta);
    IterCtx ctx{&inst, &out};

    OptCertificate cert = optimal(inst);
    const bool proven = cert.exact;
    const long long opt = cert.cost();
    if (!proven) ++out.skipped;

    Packing pnf = next_fit(inst);
    Packing pwf = worst_fit(inst);
    if (proven) {
      ctx.check(static_cast<long long>(k) * pnf.cost() <= (3LL * k - 2) * opt + k,
                "nf_bound",
                bound_detail("next_fit", pnf.cost(), opt,
                             rat(3 * k - 2, k) * Rational(opt) + 1));
      ctx.check(static_cast<long long>(k) * pwf.cost() <= (3LL * k - 3) * opt + k,
                "wf_bound",
                bound_detail("worst_fit", pwf.cost(), opt,
                             rat(3 * k - 3, k) * Rational(opt) + 1));
    }
    ctx.weight_checks("nf", k, 0, pnf, true);
    ctx.weight_checks("wf", k, 0, pwf, true);

    if (beta) {
      const int t = inst.t();
      if (t >= 2 && k > t) {
        Packing pff = first_fit(inst);
        if (proven) {
          long long lhs = static_cast<long long>(k) * t * pff.cost();
          long long rhs = (static_cast<long long>(k) * t +
                           static_cast<long long>(k - t) * (t + 1)) *
                              opt +
                          2LL * k * t;
          ctx.check(lhs <= rhs, "ff_bound",
                    bound_detail("first_fit", pff.cost(), opt,
                                 rat(static_cast<long long>(k) * t +
                                         static_cast<long long>(k - t) * (t + 1),
                                     static_cast<long long>(k) * t) *
                                         Rational(opt) +
                                     2));
        }
        ctx.weight_checks("ff_param", k, t, pff, true);
      }
    }

    // Random admissible clustering: sum of per-cluster optima stays within
    // the clustering-overhead ceiling of the whole-instance optimum.
    {
      std::vector<Item> citems = items;
      std::vector<int> labels(n);
      const int lmax = std::max(1, n / 2);
      for (int j = 0; j < n; ++j) labels[j] = static_cast<int>(pick(1, lmax));
      relabel_contiguous(labels);
      for (int j = 0; j < n; ++j) citems[j].cluster = labels[j];
      Instance ci = make_instance(citems, k, beta);
      ClusteredReport cr = clustered_cost(ci);
      if (proven && cr.inadmissible.empty() && cr.all_exact) {
        BigInt lim = ceil_rat(rat(4 * k - 2, k + 1) * Rational(opt));
        ctx.check(BigInt(cr.total) <= lim, "clustered_bound",
                  "per-cluster optima sum to " + std::to_string(cr.total) +
                      " vs ceiling " + lim.str() + " from optimum " +
                      std::to_string(opt));
        WeightFunction w = make_weight("poc_general", k);
        for (const Instance& part : split_by_cluster(ci)) {
          Packing pff = first_fit(part);
          IterCtx pctx{&part, &out};
          WeightReport c = check_ceiling(part, pff, w);
          pctx.check(c.pass, "poc_ceiling", c.detail);
          WeightReport f = check_floor(part, pff, w);
          pctx.check(f.pass, "poc_floor", f.detail);
        }
      }
    }

    // Random batching: the batch-separating rebuild of a valid packing keeps
    // feasibility, batch purity, and the proven cost bound.
    {
      int q = static_cast<int>(pick(2, 3));
      std::vector<int> labels(n);
      for (int j = 0; j < n; ++j) labels[j] = static_cast<int>(pick(1, q));
      relabel_contiguous(labels);
      int q_eff = *std::max_element(labels.begin(), labels.end());
      if ((q_eff == 2 && k >= 3) || (q_eff == 3 && k >= 4)) {
        std::vector<Item> bitems = items;
        for (int j = 0; j < n; ++j) bitems[j].batch = labels[j];
        Instance bi = make_instance(bitems, k, beta);
        const Packing& base = cert.upper;
        Packing rp = repack_batched(base, bi, q_eff);
        IterCtx bctx{&bi, &out};
        ValidityReport v = validate_packing(bi, rp);
        bctx.check(v.valid(), "repack_valid", v.summary());
        bool pure = true;
        for (const Bin& bin : rp.bins) {
          int seen = 0;
          for (int id : bin.item_ids) {
            int lb = *bi.item_by_id(id).batch;
            if (seen == 0) seen = lb;
            else if (seen != lb) pure = false;
          }
        }
        bctx.check(pure, "repack_pure", "a rebuilt bin mixes batches");
        long long pb = base.cost();
        if (q_eff == 2)
          bctx.check(static_cast<long long>(k) * rp.cost() <= (2LL * k - 1) * pb + 3LL * k,
                     "repack2_bound",
                     bound_detail("two-batch rebuild", rp.cost(), pb,
                                  rat(2 * k - 1, k) * Rational(pb) + 3));
        else
          bctx.check(2LL * k * rp.cost() <= (5LL * k - 4) * pb + 10LL * k,
                     "repack3_bound",
                     bound_detail("three-batch rebuild", rp.cost(), pb,
                                  rat(5 * k - 4, 2 * k) * Rational(pb) + 5));
      }
    }
  };
  parallel_indexed(outs.size(), [&](std::size_t i) {
    try {
      iterate(i);
    } catch (const std::exception& ex) {
      outs[i].violations.push_back({"exception", ex.what(), ""});
    }
  });

  FuzzReport rep;
  rep.runs = count;
  for (IterOut& out : outs) {
    rep.skipped_unproven += out.skipped;
    rep.checks += out.checks;
    for (FuzzViolation& v : out.violations) rep.violations.push_back(std::move(v));
  }
  return rep;
}

FuzzReport fuzz_vector(std::uint64_t seed, int count, int max_n, int max_d) {
  if (count < 0 || max_n < 1 || max_d < 2)
    throw std::invalid_argument("fuzz_vector requires count >= 0, max_n >= 1, max_d >= 2");

  std::vector<IterOut> outs(static_cast<std::size_t>(count));
  auto iterate = [&](std::size_t i) {
    IterOut& out = outs[i];
    std::mt19937_64 rng(seed ^ (0xD1B54A32D192ED03ULL * (i + 1)));
    auto pick = [&](long long lo, long long hi) {
      return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    const int d = static_cast<int>(pick(2, max_d));
    const int k = static_cast<int>(pick(2, 4));
    const int n = static_cast<int>(pick(1, max_n));

    std::vector<Item> items(n);
    std::vector<int> labels(n);
    const int lmax = std::max(1, n / 2);
    for (int j = 0; j < n; ++j) {
      items[j].id = j;
      std::vector<Rational> comps(d);
      for (int c = 0; c < d; ++c) comps[c] = rat(pick(0, 16), 16);
      items[j].size = comps[0];
      items[j].components = std::move(comps);
      labels[j] = static_cast<int>(pick(1, lmax));
    }
    relabel_contiguous(labels);
    for (int j = 0; j < n; ++j) items[j].cluster = labels[j];
    Instance inst = make_instance(items, k, std::nullopt, d);
    IterCtx ctx{&inst, &out};

    OptCertificate cert = optimal(inst);
    if (!cert.exact) {
      ++out.skipped;
      return;
    }
    ClusteredReport cr = clustered_cost(inst);
    if (!cr.inadmissible.empty() || !cr.all_exact) return;
    long long fftotal = 0;
    for (const Instance& part : split_by_cluster(inst))
      fftotal += first_fit_vector(part).cost();
    ctx.check(fftotal <= 2LL * d * cert.cost(), "vp_clustered_bound",
              "per-cluster greedy used " + std::to_string(fftotal) +
                  " bins vs allowed " + std::to_string(2LL * d * cert.cost()) +
                  " (2d times optimum " + std::to_string(cert.cost()) + ")");
  };
  parallel_indexed(outs.size(), [&](std::size_t i) {
    try {
      iterate(i);
    } catch (const std::exception& ex) {
      outs[i].violations.push_back({"exception", ex.what(), ""});
    }
  });

  FuzzReport rep;
  rep.runs = count;
  for (IterOut& out : outs) {
    rep.skipped_unproven += out.skipped;
    rep.checks += out.checks;
    for (FuzzViolation& v : out.violations) rep.violations.push_back(std::move(v));
  }
  return rep;
}

std::string FuzzReport::summary() const {
  std::ostringstream o;
  o << "runs=" << runs << " checks=" << checks
    << " skipped_unproven=" << skipped_unproven
    << " violations=" << violations.size() << "\n";
  for (const FuzzViolation& v : violations)
    o << "[" << v.check << "] " << v.detail << "\n" << v.instance << "\n";
  return o.str();
}

namespace {

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

std::string emit_plot(const std::string& csv) {
  struct Pt {
    int n;
    double ratio;
  };
  std::map<std::string, std::vector<Pt>> groups;
  std::map<std::string, double> targets;  // label -> value

  std::istringstream in(csv);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> c = split_cells(line);
    if (c.size() != 19 || !c[18].empty() || c[14].empty()) continue;
    std::string key = c[0] + " k=" + c[1];
    if (c[2] != "0") key += " t=" + c[2];
    if (c[7] != "1" && !c[7].empty()) key += " d=" + c[7];
    if (c[8] != "0") key += " q=" + c[8];
    try {
      groups[key].push_back({std::stoi(c[4]), std::stod(c[14])});
      if (!c[15].empty()) targets["target " + c[15]] = rat_to_double(parse_rational(c[15]));
    } catch (const std::exception&) {
      continue;
    }
  }
  for (auto& [key, pts] : groups)
    std::stable_sort(pts.begin(), pts.end(),
                     [](const Pt& a, const Pt& b) { return a.n < b.n; });

  const double W = 640, H = 400, L = 60, R = 20, T = 20, B = 45;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& [key, pts] : groups)
    for (const Pt& p : pts) {
      xmin = std::min(xmin, double(p.n));
      xmax = std::max(xmax, double(p.n));
      ymin = std::min(ymin, p.ratio);
      ymax = std::max(ymax, p.ratio);
    }
  for (const auto& [label, v] : targets) {
    ymin = std::min(ymin, v);
    ymax = std::max(ymax, v);
  }
  const bool empty = groups.empty();
  if (empty) {
    xmin = 0; xmax = 1; ymin = 0; ymax = 1;
  }
  if (xmax - xmin < 1e-9) { xmin -= 1; xmax += 1; }
  double pad = (ymax - ymin) * 0.08;
  if (pad < 1e-9) pad = 0.25;
  ymin -= pad;
  ymax += pad;

  auto X = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto Y = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
    << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  s << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"#ffffff\"/>\n";
  s << "<line x1=\"" << fmt2(L) << "\" y1=\"" << fmt2(H - B) << "\" x2=\"" << fmt2(W - R)
    << "\" y2=\"" << fmt2(H - B) << "\" stroke=\"#000\"/>\n";
  s << "<line x1=\"" << fmt2(L) << "\" y1=\"" << fmt2(T) << "\" x2=\"" << fmt2(L)
    << "\" y2=\"" << fmt2(H - B) << "\" stroke=\"#000\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    double xv = xmin + (xmax - xmin) * i / 4.0;
    double yv = ymin + (ymax - ymin) * i / 4.0;
    s << "<line x1=\"" << fmt2(X(xv)) << "\" y1=\"" << fmt2(H - B) << "\" x2=\""
      << fmt2(X(xv)) << "\" y2=\"" << fmt2(H - B + 5) << "\" stroke=\"#000\"/>\n";
    s << "<text x=\"" << fmt2(X(xv)) << "\" y=\"" << fmt2(H - B + 18)
      << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt_tick(xv) << "</text>\n";
    s << "<line x1=\"" << fmt2(L - 5) << "\" y1=\"" << fmt2(Y(yv)) << "\" x2=\"" << fmt2(L)
      << "\" y2=\"" << fmt2(Y(yv)) << "\" stroke=\"#000\"/>\n";
    s << "<text x=\"" << fmt2(L - 8) << "\" y=\"" << fmt2(Y(yv) + 4)
      << "\" font-size=\"11\" text-anchor=\"end\">" << fmt_tick(yv) << "</text>\n";
  }
  s << "<text x=\"" << fmt2((L + W - R) / 2) << "\" y=\"" << fmt2(H - 8)
    << "\" font-size=\"12\" text-anchor=\"middle\">N</text>\n";
  s << "<text x=\"14\" y=\"" << fmt2((T + H - B) / 2)
    << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
    << fmt2((T + H - B) / 2) << ")\">ratio</text>\n";

  for (const auto& [label, v] : targets) {
    s << "<line x1=\"" << fmt2(L) << "\" y1=\"" << fmt2(Y(v)) << "\" x2=\"" << fmt2(W - R)
      << "\" y2=\"" << fmt2(Y(v))
      << "\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>\n";
    s << "<text x=\"" << fmt2(W - R - 4) << "\" y=\"" << fmt2(Y(v) - 4)
      << "\" font-size=\"11\" text-anchor=\"end\" fill=\"#555\">" << label
      << "</text>\n";
  }

  int gi = 0;
  double ly = T + 14;
  for (const auto& [key, pts] : groups) {
    const char* color = kPalette[gi % 6];
    if (pts.size() == 1) {
      s << "<circle cx=\"" << fmt2(X(pts[0].n)) << "\" cy=\"" << fmt2(Y(pts[0].ratio))
        << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    } else {
      s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t p = 0; p < pts.size(); ++p) {
        if (p) s << ' ';
        s << fmt2(X(pts[p].n)) << ',' << fmt2(Y(pts[p].ratio));
      }
      s << "\"/>\n";
      for (const Pt& p : pts)
        s << "<circle cx=\"" << fmt2(X(p.n)) << "\" cy=\"" << fmt2(Y(p.ratio))
          << "\" r=\"2\" fill=\"" << color << "\"/>\n";
    }
    s << "<text x=\"" << fmt2(L + 10) << "\" y=\"" << fmt2(ly)
      << "\" font-size=\"11\" fill=\"" << color << "\">" << key << "</text>\n";
    ly += 14;
    ++gi;
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace ccbp
