#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccbp/algorithms.hpp"
#include "ccbp/analysis.hpp"
#include "ccbp/exact.hpp"
#include "ccbp/generators.hpp"
#include "ccbp/harness.hpp"

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream o;
    o << std::cin.rdbuf();
    return o.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream o;
  o << in.rdbuf();
  return o.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::optional<ccbp::Rational> opt_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return ccbp::parse_rational(s);
}

struct GenOpts {
  std::string kind;
  int k = 0, t = 0, n = 0, m = 0, q = 0, d = 1;
  std::string beta, eps;

  ccbp::ScenarioParams params() const {
    ccbp::ScenarioParams p;
    p.k = k;
    p.t = t;
    p.N = n;
    p.M = m;
    p.q = q;
    p.d = d;
    p.beta = opt_rat(beta);
    p.eps = opt_rat(eps);
    return p;
  }
};

void add_gen_opts(CLI::App* cmd, GenOpts& g, bool kind_required) {
  auto* ko = cmd->add_option("--kind", g.kind, "scenario kind");
  if (kind_required) ko->required();
  cmd->add_option("--k", g.k, "items per bin limit");
  cmd->add_option("--t", g.t, "size-class parameter (floor of 1/beta)");
  cmd->add_option("--n", g.n, "construction size N");
  cmd->add_option("--m", g.m, "block depth M");
  cmd->add_option("--q", g.q, "number of batches");
  cmd->add_option("--d", g.d, "vector dimension");
  cmd->add_option("--beta", g.beta, "size cap as p/q");
  cmd->add_option("--eps", g.eps, "construction epsilon as p/q");
}

void print_report(const ccbp::RunReport& rep) {
  std::cout << "kind=" << ccbp::kind_name(rep.kind)
            << " procedure=" << ccbp::procedure_name(rep.procedure) << " k="
            << rep.params.k;
  if (rep.params.t) std::cout << " t=" << rep.params.t;
  if (rep.params.beta) std::cout << " beta=" << ccbp::to_string(*rep.params.beta);
  std::cout << " N=" << rep.params.N;
  if (rep.params.M) std::cout << " M=" << rep.params.M;
  if (rep.params.eps) std::cout << " eps=" << ccbp::to_string(*rep.params.eps);
  if (rep.params.d > 1) std::cout << " d=" << rep.params.d;
  if (rep.params.q) std::cout << " q=" << rep.params.q;
  std::cout << "\n";
  std::cout << "measured=" << rep.measured_cost << " predicted=" << rep.predicted_cost
            << " match=" << (rep.prediction_match ? "yes" : "no") << "\n";
  std::cout << "opt=" << rep.opt_cost << " exact=" << (rep.opt_exact ? "yes" : "no")
            << "\n";
  std::cout << "ratio=" << ccbp::to_string(rep.ratio) << " ("
            << ccbp::to_decimal(rep.ratio) << ") target="
            << ccbp::to_string(rep.target_ratio) << " ("
            << ccbp::to_decimal(rep.target_ratio) << ")\n";
}

ccbp::GeneratedScenario load_scenario(const std::string& in_path, const GenOpts& g) {
  if (!in_path.empty()) return ccbp::parse_scenario(read_file(in_path));
  if (g.kind.empty())
    throw std::runtime_error("provide --in <scenario file> or --kind plus parameters");
  return ccbp::make_scenario(ccbp::parse_kind(g.kind), g.params());
}

int csv_mismatches(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  bool first = true;
  int bad = 0;
  while (std::getline(in, line)) {
    if (first || line.empty()) {
      first = false;
      continue;
    }
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        cells.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    cells.push_back(cur);
    if (cells.size() == 19 && cells[17] == "0") ++bad;
  }
  return bad;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification laboratory for bin packing with at most k items per bin"};
  app.require_subcommand(1);

  // gen
  auto* cgen = app.add_subcommand("gen", "generate a scenario and print it");
  GenOpts ggen;
  std::string gen_out = "-";
  add_gen_opts(cgen, ggen, true);
  cgen->add_option("--out", gen_out, "output file ('-' for stdout)");

  // run
  auto* crun = app.add_subcommand("run", "run a scenario's procedure and compare");
  GenOpts grun;
  std::string run_in, run_proc;
  add_gen_opts(crun, grun, false);
  crun->add_option("--in", run_in, "scenario file");
  crun->add_option("--procedure", run_proc, "override procedure");

  // opt
  auto* copt = app.add_subcommand("opt", "solve an instance to proven optimality");
  std::string opt_in;
  bool opt_bins = false;
  copt->add_option("--in", opt_in, "instance or scenario file")->required();
  copt->add_flag("--show-bins", opt_bins, "print the packing");

  // verify-weights
  auto* cvw = app.add_subcommand("verify-weights",
                                 "ceiling and floor checks for a weight family");
  GenOpts gvw;
  std::string vw_in, vw_weight, vw_proc;
  int vw_k = 0, vw_t = 0;
  bool vw_per_cluster = false;
  add_gen_opts(cvw, gvw, false);
  cvw->add_option("--in", vw_in, "scenario file");
  cvw->add_option("--weight", vw_weight, "weight family name")->required();
  cvw->add_option("--wk", vw_k, "k for the weight (default: instance k)");
  cvw->add_option("--wt", vw_t, "t for the weight (default: scenario t)");
  cvw->add_option("--procedure", vw_proc, "greedy that builds the packing");
  cvw->add_flag("--per-cluster", vw_per_cluster,
                "check the greedy separately on every cluster");

  // poc
  auto* cpoc = app.add_subcommand("poc", "clustering-overhead scenario shortcut");
  int poc_k = 0, poc_t = 0, poc_n = 0;
  std::string poc_beta;
  cpoc->add_option("--k", poc_k, "items per bin limit")->required();
  cpoc->add_option("--n", poc_n, "construction size N")->required();
  cpoc->add_option("--t", poc_t, "parametric variant with this t");
  cpoc->add_option("--beta", poc_beta, "size cap as p/q");

  // batched
  auto* cbat = app.add_subcommand("batched", "batch-separation scenario shortcut");
  int bat_k = 0, bat_n = 0, bat_q = 0, bat_halves = 0;
  bool bat_repack = false;
  cbat->add_option("--k", bat_k, "items per bin limit");
  cbat->add_option("--n", bat_n, "construction size N");
  cbat->add_option("--q", bat_q, "number of batches (2 or 3)");
  cbat->add_option("--halves", bat_halves, "q single-half batches instead");
  cbat->add_flag("--repack", bat_repack, "also rebuild batch-pure bins from the optimum");

  // sweep
  auto* cswp = app.add_subcommand("sweep", "CSV over a parameter grid");
  GenOpts gswp;
  std::vector<int> swp_ks, swp_ns;
  int swp_from = 0, swp_to = -1, swp_step = 1;
  bool swp_nk = false;
  std::string swp_out = "-", swp_proc;
  add_gen_opts(cswp, gswp, true);
  cswp->add_option("--ks", swp_ks, "k values");
  cswp->add_option("--ns", swp_ns, "explicit N values");
  cswp->add_option("--n-from", swp_from, "N range start");
  cswp->add_option("--n-to", swp_to, "N range end (inclusive)");
  cswp->add_option("--n-step", swp_step, "N range step");
  cswp->add_flag("--n-times-k", swp_nk, "use N = value * k");
  cswp->add_option("--procedure", swp_proc, "override procedure");
  cswp->add_option("--out", swp_out, "output file ('-' for stdout)");

  // fuzz
  auto* cfz = app.add_subcommand("fuzz", "randomized bound checking");
  std::uint64_t fz_seed = 1;
  int fz_count = 1000, fz_max_n = 12, fz_klo = 2, fz_khi = 6, fz_max_d = 3;
  std::string fz_beta;
  bool fz_vector = false;
  cfz->add_option("--seed", fz_seed, "rng seed");
  cfz->add_option("--count", fz_count, "number of instances");
  cfz->add_option("--max-n", fz_max_n, "max items per instance");
  cfz->add_option("--k-min", fz_klo, "smallest k");
  cfz->add_option("--k-max", fz_khi, "largest k");
  cfz->add_option("--beta", fz_beta, "size cap as p/q");
  cfz->add_flag("--vector", fz_vector, "vector-packing mode");
  cfz->add_option("--max-d", fz_max_d, "max dimension (vector mode)");

  // plot
  auto* cplt = app.add_subcommand("plot", "render a sweep CSV as an SVG chart");
  std::string plt_in, plt_out = "-";
  cplt->add_option("--in", plt_in, "CSV file ('-' for stdin)")->required();
  cplt->add_option("--out", plt_out, "output file ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cgen) {
      ccbp::GeneratedScenario sc =
          ccbp::make_scenario(ccbp::parse_kind(ggen.kind), ggen.params());
      write_out(gen_out, ccbp::serialize_scenario(sc));
      return 0;
    }

    if (*crun) {
      ccbp::GeneratedScenario sc = load_scenario(run_in, grun);
      ccbp::RunReport rep = run_proc.empty()
                                ? ccbp::run(sc)
                                : ccbp::run(sc, ccbp::parse_procedure(run_proc));
      print_report(rep);
      return rep.prediction_match ? 0 : 1;
    }

    if (*copt) {
      std::string text = read_file(opt_in);
      ccbp::Instance inst = text.find("--- scenario") != std::string::npos
                                ? ccbp::parse_scenario(text).instance
                                : ccbp::parse_instance(text);
      ccbp::OptCertificate cert = ccbp::optimal(inst);
      std::cout << "bins=" << cert.cost() << " lower=" << cert.lower
                << " lower_kind=" << ccbp::lower_kind_name(cert.lower_kind)
                << " exact=" << (cert.exact ? "yes" : "no") << "\n";
      if (opt_bins)
        for (const ccbp::Bin& bin : cert.upper.bins) {
          std::cout << "bin";
          for (int id : bin.item_ids) std::cout << ' ' << id;
          std::cout << "\n";
        }
      return 0;
    }

    if (*cvw) {
      ccbp::GeneratedScenario sc = load_scenario(vw_in, gvw);
      const ccbp::Instance& inst = sc.instance;
      int wk = vw_k ? vw_k : inst.k;
      int wt = vw_t ? vw_t : sc.params.t;
      ccbp::WeightFunction w = ccbp::make_weight(vw_weight, wk, wt);
      std::string proc = vw_proc;
      if (proc.empty()) {
        ccbp::Procedure dp = sc.procedure;
        if (dp == ccbp::Procedure::clustered || dp == ccbp::Procedure::batched)
          proc = "first_fit";
        else
          proc = ccbp::procedure_name(dp);
      }
      auto greedy = [&](const ccbp::Instance& part) {
        ccbp::Procedure p = ccbp::parse_procedure(proc);
        switch (p) {
          case ccbp::Procedure::next_fit: return ccbp::next_fit(part);
          case ccbp::Procedure::worst_fit: return ccbp::worst_fit(part);
          case ccbp::Procedure::first_fit: return ccbp::first_fit(part);
          case ccbp::Procedure::first_fit_vector: return ccbp::first_fit_vector(part);
          default:
            throw std::runtime_error("verify-weights needs a greedy procedure");
        }
      };
      bool all_pass = true;
      auto check_one = [&](const ccbp::Instance& part, const std::string& label) {
        ccbp::Packing p = greedy(part);
        ccbp::WeightReport c = ccbp::check_ceiling(part, p, w);
        ccbp::WeightReport f = ccbp::check_floor(part, p, w);
        std::cout << label << " bins=" << p.cost() << " total_weight="
                  << ccbp::to_string(f.total) << " ceiling=" << ccbp::to_string(c.rho)
                  << " slack=" << ccbp::to_string(f.floor_slack) << " ceiling_check="
                  << (c.pass ? "pass" : "FAIL") << " floor_check="
                  << (f.pass ? "pass" : "FAIL") << "\n";
        if (!c.pass) std::cout << "  " << c.detail << "\n";
        if (!f.pass) std::cout << "  " << f.detail << "\n";
        all_pass = all_pass && c.pass && f.pass;
      };
      if (vw_per_cluster) {
        for (const ccbp::Instance& part : ccbp::split_by_cluster(inst)) {
          int label = *part.items.front().cluster;
          check_one(part, "cluster " + std::to_string(label));
        }
      } else {
        check_one(inst, "instance");
      }
      return all_pass ? 0 : 1;
    }

    if (*cpoc) {
      ccbp::ScenarioParams p;
      p.k = poc_k;
      p.N = poc_n;
      p.t = poc_t;
      p.beta = opt_rat(poc_beta);
      ccbp::GeneratedScenario sc = ccbp::make_scenario(
          poc_t ? ccbp::ScenarioKind::poc_parametric : ccbp::ScenarioKind::poc_general,
          p);
      ccbp::RunReport rep = ccbp::run(sc);
      print_report(rep);
      return rep.prediction_match ? 0 : 1;
    }

    if (*cbat) {
      ccbp::ScenarioParams p;
      ccbp::GeneratedScenario sc = [&] {
        if (bat_halves) {
          p.q = bat_halves;
          return ccbp::make_scenario(ccbp::ScenarioKind::batched_halves, p);
        }
        p.k = bat_k;
        p.N = bat_n;
        p.q = bat_q;
        return ccbp::make_scenario(ccbp::ScenarioKind::batched, p);
      }();
      ccbp::RunReport rep = ccbp::run(sc);
      print_report(rep);
      int rc = rep.prediction_match ? 0 : 1;
      if (bat_repack && !bat_halves) {
        ccbp::Packing rp = ccbp::repack_batched(sc.opt.upper, sc.instance, p.q);
        long long pb = sc.opt.cost();
        ccbp::Rational limit =
            p.q == 2 ? ccbp::rat(2 * p.k - 1, p.k) * ccbp::Rational(pb) + 3
                     : ccbp::rat(5 * p.k - 4, 2 * p.k) * ccbp::Rational(pb) + 5;
        bool ok = ccbp::Rational(rp.cost()) <= limit &&
                  ccbp::validate_packing(sc.instance, rp).valid();
        std::cout << "repacked=" << rp.cost() << " from_opt=" << pb << " limit="
                  << ccbp::to_string(limit) << " check=" << (ok ? "pass" : "FAIL")
                  << "\n";
        if (!ok) rc = 1;
      }
      return rc;
    }

    if (*cswp) {
      std::vector<int> ns = swp_ns;
      for (int v = swp_from; swp_ns.empty() && swp_to >= swp_from && v <= swp_to;
           v += swp_step)
        ns.push_back(v);
      if (swp_ks.empty()) swp_ks.push_back(gswp.k ? gswp.k : 2);
      ccbp::ScenarioKind kind = ccbp::parse_kind(gswp.kind);
      std::vector<ccbp::ScenarioParams> grid;
      for (int k : swp_ks)
        for (int v : ns) {
          ccbp::ScenarioParams p = gswp.params();
          p.k = k;
          p.N = swp_nk ? v * k : v;
          if (kind == ccbp::ScenarioKind::batched_halves) p.q = p.N;
          grid.push_back(p);
        }
      std::optional<ccbp::Procedure> proc;
      if (!swp_proc.empty()) proc = ccbp::parse_procedure(swp_proc);
      std::string csv = ccbp::sweep_csv(kind, grid, proc);
      write_out(swp_out, csv);
      return csv_mismatches(csv) == 0 ? 0 : 1;
    }

    if (*cfz) {
      ccbp::FuzzReport rep =
          fz_vector ? ccbp::fuzz_vector(fz_seed, fz_count, fz_max_n, fz_max_d)
                    : ccbp::fuzz(fz_seed, fz_count, fz_max_n, fz_klo, fz_khi,
                                 opt_rat(fz_beta));
      std::cout << rep.summary();
      return rep.pass() ? 0 : 1;
    }

    if (*cplt) {
      write_out(plt_out, ccbp::emit_plot(read_file(plt_in)));
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
