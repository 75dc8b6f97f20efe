#pragma once

#include <algorithm>
#include <vector>

#include "monocf/counterfactual.hpp"
#include "monocf/models.hpp"
#include "monocf/oracle.hpp"

namespace monocf::test {

/// A depth-3 tree over 5 features whose two halves test crossed variable
/// pairs: root x1; x1=0 -> x2 then x4/x5; x1=1 -> x3 then x5/x4. Not monotone
/// (f(00010) = 1 > 0 = f(10010)), so it must be loaded with kTrust.
inline ModelPtr crossed_tree() {
  const json spec = json::parse(R"({
    "kind": "decision-tree", "d": 5,
    "tree": {"var": 1,
      "lo": {"var": 2,
        "lo": {"var": 4, "lo": {"leaf": 0}, "hi": {"leaf": 1}},
        "hi": {"var": 5, "lo": {"leaf": 0}, "hi": {"leaf": 1}}},
      "hi": {"var": 3,
        "lo": {"var": 5, "lo": {"leaf": 0}, "hi": {"leaf": 1}},
        "hi": {"var": 4, "lo": {"leaf": 0}, "hi": {"leaf": 1}}}}
  })");
  return model_from_json(spec, ValidationPolicy::kTrust);
}

inline ModelPtr dnf(int d, std::vector<std::vector<int>> one_based_terms) {
  for (auto& t : one_based_terms)
    for (auto& v : t) --v;
  return std::make_shared<DnfModel>(d, std::move(one_based_terms));
}

/// Test-side enumeration of the minimal counterfactuals for x* among the
/// instances consistent with rho within distance k of overwrite(x*, rho).
/// Definition-driven and independent of the search modules.
inline std::vector<Instance> enumerate_minimal(const Model& f, const Restriction& rho, const Instance& x_star, int k) {
  const int d = f.dimension();
  const Instance anchor = overwrite(x_star, rho);
  const Bit base = f.value(x_star);

  std::vector<Instance> members;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    Instance y = Instance::from_mask(mask, d);
    if (rho.consistent(y) && static_cast<int>(delta(anchor, y).size()) <= k) members.push_back(std::move(y));
  }

  auto strict_subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };

  std::vector<Instance> minimal;
  for (const Instance& y : members) {
    if (f.value(y) == base) continue;
    const std::vector<int> dy = delta(x_star, y);
    bool ok = true;
    for (const Instance& w : members) {
      if (f.value(w) == base) continue;
      if (strict_subset(delta(x_star, w), dy)) {
        ok = false;
        break;
      }
    }
    if (ok) minimal.push_back(y);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

inline std::vector<Instance> sorted(std::vector<Instance> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<Instance> parse_all(const std::vector<std::string>& strs) {
  std::vector<Instance> out;
  for (const auto& s : strs) out.push_back(Instance::parse(s));
  return out;
}

}  // namespace monocf::test
