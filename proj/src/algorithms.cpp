#include "ccbp/algorithms.hpp"

#include <stdexcept>

namespace ccbp {

bool fits(const Rational& load, int count, const Rational& size, int k) {
  return count <= k - 1 && load + size <= 1;
}

bool fits_vector(const std::vector<Rational>& loads, int count,
                 const std::vector<Rational>& comps, int k) {
  if (count > k - 1) return false;
  for (std::size_t c = 0; c < loads.size(); ++c)
    if (loads[c] + comps[c] > 1) return false;
  return true;
}

namespace {

void require_scalar(const Instance& inst, const char* who) {
  if (inst.d != 1)
    throw std::invalid_argument(std::string(who) + " handles d=1 instances only");
}

struct OpenBin {
  Bin bin;
  Rational load;
};

}  // namespace

Packing next_fit(const Instance& inst) {
  require_scalar(inst, "next_fit");
  Packing p;
  Rational load = 0;
  Bin active;
  for (const auto& it : inst.items) {
    if (!active.item_ids.empty() && !fits(load, active.count(), it.size, inst.k)) {
      p.bins.push_back(std::move(active));
      active = Bin{};
      load = 0;
    }
    active.item_ids.push_back(it.id);
    load += it.size;
  }
  if (!active.item_ids.empty()) p.bins.push_back(std::move(active));
  return p;
}

Packing worst_fit(const Instance& inst) {
  require_scalar(inst, "worst_fit");
  std::vector<OpenBin> bins;
  for (const auto& it : inst.items) {
    int best = -1;
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (!fits(bins[b].load, bins[b].bin.count(), it.size, inst.k)) continue;
      if (best < 0 || bins[b].load < bins[best].load) best = static_cast<int>(b);
    }
    if (best < 0) {
      bins.push_back({Bin{}, Rational(0)});
      best = static_cast<int>(bins.size()) - 1;
    }
    bins[best].bin.item_ids.push_back(it.id);
    bins[best].load += it.size;
  }
  Packing p;
  for (auto& b : bins) p.bins.push_back(std::move(b.bin));
  return p;
}

Packing first_fit(const Instance& inst) {
  require_scalar(inst, "first_fit");
  std::vector<OpenBin> bins;
  for (const auto& it : inst.items) {
    int target = -1;
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (fits(bins[b].load, bins[b].bin.count(), it.size, inst.k)) {
        target = static_cast<int>(b);
        break;
      }
    }
    if (target < 0) {
      bins.push_back({Bin{}, Rational(0)});
      target = static_cast<int>(bins.size()) - 1;
    }
    bins[target].bin.item_ids.push_back(it.id);
    bins[target].load += it.size;
  }
  Packing p;
  for (auto& b : bins) p.bins.push_back(std::move(b.bin));
  return p;
}

Packing first_fit_vector(const Instance& inst) {
  for (const auto& it : inst.items)
    if (static_cast<int>(it.components.size()) != inst.d)
      throw std::invalid_argument("first_fit_vector requires d components per item");
  struct VBin {
    Bin bin;
    std::vector<Rational> loads;
  };
  std::vector<VBin> bins;
  for (const auto& it : inst.items) {
    int target = -1;
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (fits_vector(bins[b].loads, bins[b].bin.count(), it.components, inst.k)) {
        target = static_cast<int>(b);
        break;
      }
    }
    if (target < 0) {
      bins.push_back({Bin{}, std::vector<Rational>(inst.d, Rational(0))});
      target = static_cast<int>(bins.size()) - 1;
    }
    bins[target].bin.item_ids.push_back(it.id);
    for (int c = 0; c < inst.d; ++c) bins[target].loads[c] += it.components[c];
  }
  Packing p;
  for (auto& b : bins) p.bins.push_back(std::move(b.bin));
  return p;
}

}  // namespace ccbp
