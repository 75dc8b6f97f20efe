#include "monocf/models.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include "monocf/errors.hpp"

namespace monocf {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

}  // namespace

DnfModel::DnfModel(int d, std::vector<std::vector<int>> terms) : d_(d), terms_(std::move(terms)) {
  require(d_ >= 1, "dnf: dimension must be >= 1");
  require(!terms_.empty(), "dnf: needs at least one term");
  for (auto& term : terms_) {
    require(!term.empty(), "dnf: empty term would make the model constant 1");
    std::sort(term.begin(), term.end());
    term.erase(std::unique(term.begin(), term.end()), term.end());
    for (int v : term) require(v >= 0 && v < d_, "dnf: variable index out of range");
  }
}

Bit DnfModel::value(const Instance& x) const {
  for (const auto& term : terms_) {
    bool all = true;
    for (int v : term)
      if (!x[v]) {
        all = false;
        break;
      }
    if (all) return 1;
  }
  return 0;
}

std::string DnfModel::name() const {
  return "dnf(d=" + std::to_string(d_) + ",terms=" + std::to_string(terms_.size()) + ")";
}

DictatorModel::DictatorModel(int d, int i) : d_(d), i_(i) {
  require(d_ >= 1, "dictator: dimension must be >= 1");
  require(i_ >= 0 && i_ < d_, "dictator: index out of range");
}

Bit DictatorModel::value(const Instance& x) const { return x[i_]; }

std::string DictatorModel::name() const { return "dictator(d=" + std::to_string(d_) + ",i=" + std::to_string(i_ + 1) + ")"; }

MajorityModel::MajorityModel(int d) : d_(d) {
  require(d_ >= 1 && d_ % 2 == 1, "majority: dimension must be odd");
}

Bit MajorityModel::value(const Instance& x) const {
  int ones = 0;
  for (int i = 0; i < d_; ++i) ones += x[i];
  return ones > d_ / 2 ? 1 : 0;
}

std::string MajorityModel::name() const { return "majority(d=" + std::to_string(d_) + ")"; }

PlantedThresholdModel::PlantedThresholdModel(int d, int s, int delta, std::vector<Bit> z)
    : d_(d), s_(s), delta_(delta), z_(std::move(z)) {
  require(d_ >= 1, "threshold-planted: dimension must be >= 1");
  require(delta_ >= 1, "threshold-planted: delta must be >= 1 (the construction degenerates at delta = 0)");
  require(delta_ <= s_ && s_ <= d_, "threshold-planted: need delta <= S <= d");
  require(static_cast<int>(z_.size()) == s_, "threshold-planted: |z| must equal S");
  int weight = 0;
  for (Bit b : z_) weight += b;
  require(weight == delta_, "threshold-planted: z must have Hamming weight delta");
}

Bit PlantedThresholdModel::value(const Instance& x) const {
  int ones = 0;
  bool equals_z = true;
  for (int i = 0; i < s_; ++i) {
    ones += x[i];
    equals_z = equals_z && (x[i] == z_[static_cast<std::size_t>(i)]);
  }
  return (ones >= delta_ + 1 || equals_z) ? 1 : 0;
}

std::string PlantedThresholdModel::name() const {
  return "threshold-planted(d=" + std::to_string(d_) + ",S=" + std::to_string(s_) + ",delta=" + std::to_string(delta_) +
         ")";
}

Instance PlantedThresholdModel::planted_optimum() const {
  std::vector<Bit> bits(static_cast<std::size_t>(d_), 0);
  for (int i = 0; i < s_; ++i) bits[static_cast<std::size_t>(i)] = z_[static_cast<std::size_t>(i)];
  return Instance(std::move(bits));
}

DecisionTreeModel::DecisionTreeModel(int d, std::vector<Node> nodes, int root) : d_(d), nodes_(std::move(nodes)), root_(root) {
  require(d_ >= 1, "decision-tree: dimension must be >= 1");
  require(root_ >= 0 && root_ < static_cast<int>(nodes_.size()), "decision-tree: bad root");
  for (const auto& n : nodes_) {
    if (n.feature < 0) continue;
    require(n.feature < d_, "decision-tree: variable index out of range");
    require(n.lo >= 0 && n.lo < static_cast<int>(nodes_.size()) && n.hi >= 0 && n.hi < static_cast<int>(nodes_.size()),
            "decision-tree: dangling child");
  }
}

Bit DecisionTreeModel::value(const Instance& x) const {
  int at = root_;
  while (nodes_[static_cast<std::size_t>(at)].feature >= 0) {
    const auto& n = nodes_[static_cast<std::size_t>(at)];
    at = x[n.feature] ? n.hi : n.lo;
  }
  return nodes_[static_cast<std::size_t>(at)].leaf_value;
}

std::string DecisionTreeModel::name() const { return "decision-tree(d=" + std::to_string(d_) + ")"; }

std::optional<MonotonicityViolation> check_monotone_exhaustive(const Model& f) {
  const int d = f.dimension();
  const auto table = truth_table(f);
  // Checking every Hasse edge (x, x | 2^j) suffices for full monotonicity.
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
    for (int j = 0; j < d; ++j) {
      if (mask & (1u << j)) continue;
      const std::uint32_t up = mask | (1u << j);
      if (table[mask] > table[up])
        return MonotonicityViolation{Instance::from_mask(mask, d), Instance::from_mask(up, d)};
    }
  }
  return std::nullopt;
}

std::optional<MonotonicityViolation> check_monotone_sampled(const Model& f, int pairs, std::uint64_t seed) {
  const int d = f.dimension();
  Rng rng(seed);
  for (int t = 0; t < pairs; ++t) {
    std::vector<Bit> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      lo[static_cast<std::size_t>(i)] = static_cast<Bit>(rng.bit());
      hi[static_cast<std::size_t>(i)] = static_cast<Bit>(lo[static_cast<std::size_t>(i)] | (rng.bit() ? 1 : 0));
    }
    Instance x(std::move(lo)), y(std::move(hi));
    if (f.value(x) > f.value(y)) return MonotonicityViolation{std::move(x), std::move(y)};
  }
  return std::nullopt;
}

namespace {

int parse_tree_into(const json& j, std::vector<DecisionTreeModel::Node>& nodes, int d) {
  DecisionTreeModel::Node node;
  if (j.contains("leaf")) {
    const int v = j.at("leaf").get<int>();
    require(v == 0 || v == 1, "decision-tree: leaf value must be 0 or 1");
    node.leaf_value = static_cast<Bit>(v);
  } else {
    require(j.contains("var") && j.contains("lo") && j.contains("hi"),
            "decision-tree: node needs either \"leaf\" or \"var\"/\"lo\"/\"hi\"");
    node.feature = j.at("var").get<int>() - 1;
    require(node.feature >= 0 && node.feature < d, "decision-tree: \"var\" out of range (1-based)");
    node.lo = parse_tree_into(j.at("lo"), nodes, d);
    node.hi = parse_tree_into(j.at("hi"), nodes, d);
  }
  nodes.push_back(node);
  return static_cast<int>(nodes.size()) - 1;
}

std::vector<int> indices_from_json(const json& arr, int d, const std::string& what) {
  require(arr.is_array(), what + ": expected an array of 1-based indices");
  std::vector<int> out;
  for (const auto& v : arr) {
    const int i = v.get<int>();
    require(i >= 1 && i <= d, what + ": index " + std::to_string(i) + " out of range [1," + std::to_string(d) + "]");
    out.push_back(i - 1);
  }
  return out;
}

std::vector<Bit> bits_from_string(const std::string& s, const std::string& what) {
  std::vector<Bit> bits;
  for (char c : s) {
    require(c == '0' || c == '1', what + ": expected a 0/1 string");
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return bits;
}

}  // namespace

ModelPtr model_from_json(const json& spec, ValidationPolicy policy) {
  require(spec.is_object() && spec.contains("kind"), "model spec: expected an object with a \"kind\" field");
  const std::string kind = spec.at("kind").get<std::string>();
  ModelPtr model;
  if (kind == "dnf") {
    const int d = spec.at("d").get<int>();
    require(spec.contains("terms"), "dnf: missing \"terms\"");
    std::vector<std::vector<int>> terms;
    for (const auto& t : spec.at("terms")) terms.push_back(indices_from_json(t, d, "dnf term"));
    model = std::make_shared<DnfModel>(d, std::move(terms));
  } else if (kind == "dictator") {
    model = std::make_shared<DictatorModel>(spec.at("d").get<int>(), spec.at("i").get<int>() - 1);
  } else if (kind == "majority") {
    model = std::make_shared<MajorityModel>(spec.at("d").get<int>());
  } else if (kind == "threshold-planted") {
    model = std::make_shared<PlantedThresholdModel>(spec.at("d").get<int>(), spec.at("S").get<int>(),
                                                    spec.at("delta").get<int>(),
                                                    bits_from_string(spec.at("z").get<std::string>(), "z"));
  } else if (kind == "decision-tree") {
    const int d = spec.at("d").get<int>();
    std::vector<DecisionTreeModel::Node> nodes;
    const int root = parse_tree_into(spec.at("tree"), nodes, d);
    model = std::make_shared<DecisionTreeModel>(d, std::move(nodes), root);
  } else {
    throw UsageError("model spec: unknown kind \"" + kind + "\"");
  }

  if (policy == ValidationPolicy::kStrict) {
    if (model->dimension() <= 16) {
      if (auto v = check_monotone_exhaustive(*model))
        throw UsageError("model spec: evaluator is not monotone: f(" + v->low.str() + ") > f(" + v->high.str() + ")");
    } else if (auto v = check_monotone_sampled(*model, 10000, 0x5eedu)) {
      std::cerr << "warning: sampled monotonicity check found a violation: f(" << v->low.str() << ") > f("
                << v->high.str() << "); results on this model are undefined\n";
    }
  }
  return model;
}

ModelPtr model_from_file(const std::string& path, ValidationPolicy policy) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open model file: " + path);
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
  return model_from_json(spec, policy);
}

std::shared_ptr<const DnfModel> random_dnf(int d, int num_terms, int max_width, Rng& rng) {
  require(d >= 1 && num_terms >= 1 && max_width >= 1, "random_dnf: bad parameters");
  std::vector<std::vector<int>> terms;
  terms.reserve(static_cast<std::size_t>(num_terms));
  for (int t = 0; t < num_terms; ++t) {
    const int width = rng.range(1, std::min(max_width, d));
    terms.push_back(rng.sample(d, width));
  }
  return std::make_shared<DnfModel>(d, std::move(terms));
}

}  // namespace monocf
