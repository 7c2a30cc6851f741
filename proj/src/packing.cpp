#include "ccbp/packing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ccbp {

Rational bin_load(const Instance& inst, const Bin& bin) {
  Rational load = 0;
  for (int id : bin.item_ids) load += inst.item_by_id(id).size;
  return load;
}

std::vector<Rational> bin_load_vector(const Instance& inst, const Bin& bin) {
  std::vector<Rational> loads(inst.d, Rational(0));
  for (int id : bin.item_ids) {
    const Item& it = inst.item_by_id(id);
    if (inst.d == 1) {
      loads[0] += it.size;
    } else {
      for (int c = 0; c < inst.d; ++c) loads[c] += it.components[c];
    }
  }
  return loads;
}

std::string ValidityReport::summary() const {
  if (valid()) return "valid";
  std::string s;
  for (const auto& e : structural_errors) s += "structural: " + e + "\n";
  for (const auto& v : violations) s += v.detail + "\n";
  return s;
}

ValidityReport validate_packing(const Instance& inst, const Packing& p) {
  ValidityReport report;
  std::set<int> known;
  for (const auto& it : inst.items) known.insert(it.id);

  std::map<int, std::vector<int>> seen_in;  // id -> bins
  for (std::size_t b = 0; b < p.bins.size(); ++b) {
    const Bin& bin = p.bins[b];
    if (bin.item_ids.empty()) {
      report.structural_errors.push_back("bin " + std::to_string(b) + " is empty");
      continue;
    }
    std::vector<Rational> loads(inst.d, Rational(0));
    for (int id : bin.item_ids) {
      if (!known.count(id)) {
        report.structural_errors.push_back("bin " + std::to_string(b) +
                                           " references unknown item id " +
                                           std::to_string(id));
        continue;
      }
      seen_in[id].push_back(static_cast<int>(b));
      const Item& it = inst.item_by_id(id);
      if (inst.d == 1) {
        loads[0] += it.size;
      } else {
        for (int c = 0; c < inst.d; ++c) loads[c] += it.components[c];
      }
    }
    for (int c = 0; c < inst.d; ++c) {
      if (loads[c] > 1) {
        Violation v;
        v.kind = ViolationKind::overload;
        v.bin = static_cast<int>(b);
        v.component = c;
        v.detail = "bin " + std::to_string(b) + " overloaded" +
                   (inst.d > 1 ? " in component " + std::to_string(c) : "") +
                   ": load " + to_string(loads[c]);
        report.violations.push_back(std::move(v));
      }
    }
    if (bin.count() > inst.k) {
      Violation v;
      v.kind = ViolationKind::overcount;
      v.bin = static_cast<int>(b);
      v.detail = "bin " + std::to_string(b) + " holds " +
                 std::to_string(bin.count()) + " items, k=" + std::to_string(inst.k);
      report.violations.push_back(std::move(v));
    }
  }

  for (const auto& it : inst.items) {
    auto found = seen_in.find(it.id);
    if (found == seen_in.end()) {
      Violation v;
      v.kind = ViolationKind::missing_item;
      v.item_id = it.id;
      v.detail = "item " + std::to_string(it.id) + " not packed";
      report.violations.push_back(std::move(v));
    } else if (found->second.size() > 1) {
      Violation v;
      v.kind = ViolationKind::duplicate_item;
      v.item_id = it.id;
      v.detail = "item " + std::to_string(it.id) + " packed " +
                 std::to_string(found->second.size()) + " times";
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

std::string lower_kind_name(LowerKind k) {
  switch (k) {
    case LowerKind::size_bound: return "size_bound";
    case LowerKind::cardinality_bound: return "cardinality_bound";
    case LowerKind::big_item_bound: return "big_item_bound";
    case LowerKind::exhaustive: return "exhaustive";
  }
  return "?";
}

LowerBounds lower_bounds(const Instance& inst) {
  LowerBounds lb;
  std::vector<Rational> totals(inst.d, Rational(0));
  long long big = 0;
  for (const auto& it : inst.items) {
    if (inst.d == 1) {
      totals[0] += it.size;
      if (it.size > Rational(1, 2)) ++big;
    } else {
      for (int c = 0; c < inst.d; ++c) totals[c] += it.components[c];
    }
  }
  for (const auto& t : totals)
    lb.size_bound = std::max(lb.size_bound, to_ll(ceil_rat(t)));
  lb.cardinality_bound =
      (static_cast<long long>(inst.items.size()) + inst.k - 1) / inst.k;
  lb.big_item_bound = inst.d == 1 ? big : 0;

  lb.value = lb.size_bound;
  lb.kind = LowerKind::size_bound;
  if (lb.cardinality_bound > lb.value) {
    lb.value = lb.cardinality_bound;
    lb.kind = LowerKind::cardinality_bound;
  }
  if (lb.big_item_bound > lb.value) {
    lb.value = lb.big_item_bound;
    lb.kind = LowerKind::big_item_bound;
  }
  return lb;
}

OptCertificate make_certificate(Packing upper, const LowerBounds& lb) {
  OptCertificate cert;
  cert.upper = std::move(upper);
  cert.lower = lb.value;
  cert.lower_kind = lb.kind;
  cert.exact = cert.upper.cost() == cert.lower;
  return cert;
}

namespace {

std::vector<Instance> split_by(const Instance& inst, bool by_cluster) {
  std::map<int, std::vector<Item>> groups;
  for (const auto& it : inst.items) {
    auto label = by_cluster ? it.cluster : it.batch;
    if (!label)
      throw std::invalid_argument(std::string("item ") + std::to_string(it.id) +
                                  " lacks a " + (by_cluster ? "cluster" : "batch") +
                                  " label");
    groups[*label].push_back(it);
  }
  std::vector<Instance> out;
  out.reserve(groups.size());
  for (auto& [label, items] : groups)
    out.push_back(make_instance(std::move(items), inst.k, inst.beta, inst.d));
  return out;
}

}  // namespace

std::vector<Instance> split_by_cluster(const Instance& inst) { return split_by(inst, true); }
std::vector<Instance> split_by_batch(const Instance& inst) { return split_by(inst, false); }

}  // namespace ccbp
