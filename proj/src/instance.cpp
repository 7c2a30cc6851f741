#include "ccbp/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ccbp {

int Instance::t() const {
  if (!beta) throw std::logic_error("t() requires beta");
  // beta = p/q in (0,1] => t = floor(q/p)
  return to_ll(floor_rat(Rational(denominator(*beta), numerator(*beta))));
}

const Item& Instance::item_by_id(int id) const {
  if (id_index_.size() != items.size()) {
    id_index_.clear();
    for (std::size_t i = 0; i < items.size(); ++i) id_index_[items[i].id] = i;
  }
  auto it = id_index_.find(id);
  if (it == id_index_.end())
    throw std::out_of_range("unknown item id " + std::to_string(id));
  return items[it->second];
}

bool Instance::has_clusters() const {
  return !items.empty() && items.front().cluster.has_value();
}

bool Instance::has_batches() const {
  return !items.empty() && items.front().batch.has_value();
}

int Instance::max_cluster() const {
  int m = 0;
  for (const auto& it : items)
    if (it.cluster) m = std::max(m, *it.cluster);
  return m;
}

int Instance::max_batch() const {
  int m = 0;
  for (const auto& it : items)
    if (it.batch) m = std::max(m, *it.batch);
  return m;
}

Instance make_instance(std::vector<Item> items, int k,
                       std::optional<Rational> beta, int d) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (beta && (*beta <= 0 || *beta > 1))
    throw std::invalid_argument("beta must lie in (0,1]");
  std::set<int> ids;
  bool any_cluster = false, all_cluster = true;
  bool any_batch = false, all_batch = true;
  for (const auto& it : items) {
    if (!ids.insert(it.id).second)
      throw std::invalid_argument("duplicate item id " + std::to_string(it.id));
    if (it.size < 0 || it.size > 1)
      throw std::invalid_argument("item size out of [0,1]");
    if (beta && it.size > *beta)
      throw std::invalid_argument("item size exceeds beta");
    if (d >= 2 && static_cast<int>(it.components.size()) != d)
      throw std::invalid_argument("item lacks d components");
    if (d == 1 && it.components.size() > 1)
      throw std::invalid_argument("too many components for d=1");
    for (const auto& c : it.components)
      if (c < 0 || c > 1)
        throw std::invalid_argument("component out of [0,1]");
    if (it.cluster) {
      if (*it.cluster < 1) throw std::invalid_argument("cluster ids are 1-based");
      any_cluster = true;
    } else {
      all_cluster = false;
    }
    if (it.batch) {
      if (*it.batch < 1) throw std::invalid_argument("batch ids are 1-based");
      any_batch = true;
    } else {
      all_batch = false;
    }
  }
  if (any_cluster && !all_cluster)
    throw std::invalid_argument("cluster labels must cover all items or none");
  if (any_batch && !all_batch)
    throw std::invalid_argument("batch labels must cover all items or none");
  Instance inst;
  inst.items = std::move(items);
  inst.k = k;
  inst.beta = std::move(beta);
  inst.d = d;
  return inst;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

[[noreturn]] void fail_line(int line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

void check_contiguous(const Instance& inst, bool cluster) {
  std::set<int> labels;
  for (const auto& it : inst.items) {
    auto v = cluster ? it.cluster : it.batch;
    if (v) labels.insert(*v);
  }
  if (labels.empty()) return;
  int expect = 1;
  for (int v : labels) {
    if (v != expect)
      throw ParseError(std::string(cluster ? "cluster" : "batch") +
                       " ids must form a contiguous range 1..l");
    ++expect;
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int k = 0, d = 1;
  std::optional<Rational> beta;
  std::vector<Item> items;

  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    if (!have_header) {
      for (const auto& t : tokens) {
        auto eq = t.find('=');
        if (eq == std::string::npos) fail_line(line_no, "header expects key=value tokens");
        std::string key = t.substr(0, eq), val = t.substr(eq + 1);
        try {
          if (key == "k") k = std::stoi(val);
          else if (key == "beta") beta = parse_rational(val);
          else if (key == "d") d = std::stoi(val);
          else fail_line(line_no, "unknown header key '" + key + "'");
        } catch (const ParseError&) {
          throw;
        } catch (const std::exception& e) {
          fail_line(line_no, e.what());
        }
      }
      if (k < 1) fail_line(line_no, "header must set k >= 1");
      have_header = true;
      continue;
    }

    if (tokens.size() != 2) fail_line(line_no, "item line expects '<id> <size...>'");
    Item item;
    try {
      item.id = std::stoi(tokens[0]);
    } catch (const std::exception&) {
      fail_line(line_no, "bad item id '" + tokens[0] + "'");
    }
    std::string rest = tokens[1];
    std::string comps;
    auto bar = rest.find('|');
    if (bar != std::string::npos) {
      comps = rest.substr(bar + 1);
      rest = rest.substr(0, bar);
    }
    auto fields = split(rest, ',');
    if (fields.empty() || fields.size() > 3)
      fail_line(line_no, "expected size[,cluster][,batch]");
    try {
      item.size = parse_rational(fields[0]);
      if (fields.size() >= 2 && !fields[1].empty()) item.cluster = std::stoi(fields[1]);
      if (fields.size() >= 3 && !fields[2].empty()) item.batch = std::stoi(fields[2]);
      if (!comps.empty())
        for (const auto& c : split(comps, ';')) item.components.push_back(parse_rational(c));
    } catch (const std::exception& e) {
      fail_line(line_no, e.what());
    }
    items.push_back(std::move(item));
  }
  if (!have_header) throw ParseError("missing header line");

  Instance inst;
  try {
    inst = make_instance(std::move(items), k, beta, d);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  check_contiguous(inst, true);
  check_contiguous(inst, false);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::string out = "k=" + std::to_string(inst.k);
  if (inst.beta) out += " beta=" + to_string(*inst.beta);
  if (inst.d != 1) out += " d=" + std::to_string(inst.d);
  out += "\n";
  for (const auto& it : inst.items) {
    out += std::to_string(it.id) + " " + to_string(it.size);
    if (it.cluster || it.batch) {
      out += ",";
      if (it.cluster) out += std::to_string(*it.cluster);
      if (it.batch) out += "," + std::to_string(*it.batch);
    }
    if (!it.components.empty()) {
      out += "|";
      for (std::size_t i = 0; i < it.components.size(); ++i) {
        if (i) out += ";";
        out += to_string(it.components[i]);
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace ccbp
