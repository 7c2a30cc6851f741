#include "ccbp/analysis.hpp"

#include <stdexcept>

namespace ccbp {

namespace {

Rational q(long long n, long long d = 1) { return rat(n, d); }

WeightPiece piece(Rational lo, Rational hi, bool lo_closed, bool hi_closed,
                  Rational slope, Rational intercept) {
  WeightPiece p;
  p.lo = std::move(lo);
  p.hi = std::move(hi);
  p.lo_closed = lo_closed;
  p.hi_closed = hi_closed;
  p.slope = std::move(slope);
  p.intercept = std::move(intercept);
  return p;
}

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void require_no_t(const std::string& name, int t) {
  if (t != 0) bad("weight '" + name + "' takes no t parameter");
}

}  // namespace

Rational WeightFunction::operator()(const Rational& x) const {
  for (const WeightPiece& p : pieces)
    if (p.contains(x)) return p.slope * x + p.intercept;
  throw std::domain_error("weight '" + name + "' undefined at " + ccbp::to_string(x));
}

WeightFunction make_weight(const std::string& name, int k, int t) {
  WeightFunction w;
  w.name = name;
  w.k = k;
  w.t = t;
  if (name == "poc_general") {
    // Pair floor: two bins that cannot be merged have weight sum >= 2, so any
    // packing of a set needing >= 2 bins has total weight >= its bin count.
    if (k < 2) bad("weight 'poc_general' requires k >= 2");
    require_no_t(name, t);
    w.pieces = {piece(q(0), q(1), true, true, q(2 * k - 2, k + 1), q(2, k + 1))};
    w.ceiling = q(4 * k - 2, k + 1);
    w.floor_slack = q(0);
  } else if (name == "poc_param") {
    if (k < 2) bad("weight 'poc_param' requires k >= 2");
    if (t < 1) bad("weight 'poc_param' requires t >= 1");
    Rational slope = t <= k ? q(2 * (k - t), k + 1) : q(0);
    w.pieces = {piece(q(0), q(1, t), true, true, slope, q(2, k + 1))};
    w.ceiling = t <= k ? q(4 * k - 2 * t, k + 1) : q(2 * k, k + 1);
    w.floor_slack = q(0);
  } else if (name == "nf") {
    if (k < 2) bad("weight 'nf' requires k >= 2");
    require_no_t(name, t);
    w.pieces = {piece(q(0), q(1), true, true, q(2 * (k - 1), k), q(1, k))};
    w.ceiling = q(3 * k - 2, k);
    w.floor_slack = q(1);
  } else if (name == "wf") {
    // Items above 1/2 get an extra 1/k so that any bin holding one is worth
    // a full unit; light bins then need load > 1/2 and hence >= 2 items.
    if (k < 2) bad("weight 'wf' requires k >= 2");
    require_no_t(name, t);
    Rational slope = q(2 * (k - 2), k);
    w.pieces = {piece(q(0), q(1, 2), true, true, slope, q(1, k)),
                piece(q(1, 2), q(1), false, true, slope, q(2, k))};
    w.ceiling = q(3 * k - 3, k);
    w.floor_slack = q(1);
  } else if (name == "beta04") {
    if (k < 4) bad("weight 'beta04' requires k >= 4");
    require_no_t(name, t);
    w.pieces = {piece(q(0), q(2, 5), true, true, q(5 * (k - 2), 3 * k), q(1, k))};
    w.ceiling = q(8 * k - 10, 3 * k);
    w.floor_slack = q(1);
  } else if (name == "wf_5_12") {
    if (k != 4 && k != 5) bad("weight 'wf_5_12' requires k in {4,5}");
    require_no_t(name, t);
    w.pieces = {piece(q(0), q(1, 6), true, true, q(0), q(1, k)),
                piece(q(1, 6), q(1, 3), false, true, q(0), q(k + 1, 3 * k)),
                piece(q(1, 3), q(5, 12), false, true, q(0), q(2 * k - 1, 3 * k))};
    w.ceiling = q(8 * k - 10, 3 * k);
    w.floor_slack = q(2);
  } else if (name == "ff_param") {
    if (t < 2) bad("weight 'ff_param' requires t >= 2");
    if (k < t) bad("weight 'ff_param' requires k >= t");
    w.pieces = {piece(q(0), q(1, t), true, true, q((k - t) * (t + 1), k * t), q(1, k))};
    w.ceiling = q(k * t + (k - t) * (t + 1), k * t);
    w.floor_slack = q(2);
  } else if (name == "batched_k2") {
    if (k != 2) bad("weight 'batched_k2' requires k = 2");
    require_no_t(name, t);
    w.pieces = {piece(q(0), q(1, 2), true, true, q(0), q(1, 2)),
                piece(q(1, 2), q(1), false, true, q(0), q(1))};
    w.ceiling = q(3, 2);
    w.floor_slack = q(1, 2);
  } else if (name == "batched_k3") {
    if (k != 3) bad("weight 'batched_k3' requires k = 3");
    require_no_t(name, t);
    w.pieces = {piece(q(0), q(1, 3), true, true, q(0), q(1, 3)),
                piece(q(1, 3), q(1, 2), false, true, q(0), q(1, 2)),
                piece(q(1, 2), q(1), false, true, q(0), q(1))};
    w.ceiling = q(11, 6);
    w.floor_slack = q(1);
  } else {
    bad("unknown weight family '" + name + "'");
  }
  return w;
}

Rational opt_ceiling(const WeightFunction& w) { return w.ceiling; }

namespace {

void require_valid(const Instance& inst, const Packing& packing) {
  ValidityReport rep = validate_packing(inst, packing);
  if (!rep.valid())
    throw std::invalid_argument("weight check requires a valid packing: " + rep.summary());
}

WeightReport weigh(const Instance& inst, const Packing& packing, const WeightFunction& w) {
  WeightReport rep;
  rep.rho = w.ceiling;
  rep.floor_slack = w.floor_slack;
  rep.total = 0;
  rep.per_bin.reserve(packing.bins.size());
  for (const Bin& bin : packing.bins) {
    Rational sum = 0;
    for (int id : bin.item_ids) sum += w(inst.item_by_id(id).size);
    rep.per_bin.push_back(sum);
    rep.total += sum;
  }
  return rep;
}

}  // namespace

WeightReport check_ceiling(const Instance& inst, const Packing& packing,
                           const WeightFunction& w) {
  require_valid(inst, packing);
  WeightReport rep = weigh(inst, packing, w);
  rep.pass = true;
  for (std::size_t i = 0; i < rep.per_bin.size(); ++i) {
    if (rep.per_bin[i] > rep.rho) {
      rep.pass = false;
      rep.detail = "bin " + std::to_string(i) + " weight " + ccbp::to_string(rep.per_bin[i]) +
                   " exceeds ceiling " + ccbp::to_string(rep.rho);
      break;
    }
  }
  return rep;
}

WeightReport check_floor(const Instance& inst, const Packing& packing,
                         const WeightFunction& w) {
  require_valid(inst, packing);
  WeightReport rep = weigh(inst, packing, w);
  Rational need = Rational(static_cast<long long>(packing.bins.size())) - w.floor_slack;
  rep.pass = rep.total >= need;
  if (!rep.pass)
    rep.detail = "total weight " + ccbp::to_string(rep.total) + " below " +
                 ccbp::to_string(need) + " (bins - slack)";
  return rep;
}

}  // namespace ccbp
