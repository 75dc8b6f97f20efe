#include "monocf/zoo.hpp"

namespace monocf {

namespace {

std::vector<int> iota_term(int lo, int hi) {  // 0-based [lo, hi)
  std::vector<int> t;
  for (int i = lo; i < hi; ++i) t.push_back(i);
  return t;
}

ModelPtr and_of(int d) { return std::make_shared<DnfModel>(d, std::vector<std::vector<int>>{iota_term(0, d)}); }

ModelPtr or_of(int d) {
  std::vector<std::vector<int>> terms;
  for (int i = 0; i < d; ++i) terms.push_back({i});
  return std::make_shared<DnfModel>(d, std::move(terms));
}

}  // namespace

std::vector<ZooEntry> standard_zoo(int max_d) {
  std::vector<ZooEntry> zoo;
  auto add = [&](std::string name, ModelPtr m) {
    if (m->dimension() <= max_d) zoo.push_back(ZooEntry{std::move(name), std::move(m)});
  };

  add("and2", and_of(2));
  add("and3", and_of(3));
  add("or3", or_of(3));
  add("maj3", std::make_shared<MajorityModel>(3));
  add("maj5", std::make_shared<MajorityModel>(5));
  add("maj7", std::make_shared<MajorityModel>(7));
  add("dictator5_3", std::make_shared<DictatorModel>(5, 2));
  add("dictator9_1", std::make_shared<DictatorModel>(9, 0));
  add("x1_or_x2x3", std::make_shared<DnfModel>(3, std::vector<std::vector<int>>{{0}, {1, 2}}));
  // Two tribes-style DNFs: disjoint conjunctions.
  add("tribes2x3", std::make_shared<DnfModel>(6, std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}}));
  add("tribes3x2", std::make_shared<DnfModel>(6, std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}}));
  // Overlapping-term DNFs exercise non-disjoint certificate structure.
  add("chain8", std::make_shared<DnfModel>(8, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  add("mixed10",
      std::make_shared<DnfModel>(10, std::vector<std::vector<int>>{{0, 3, 7}, {1, 2}, {4, 5, 6}, {0, 8, 9}}));
  add("planted6_4_2", std::make_shared<PlantedThresholdModel>(6, 4, 2, std::vector<Bit>{1, 1, 0, 0}));
  add("planted8_8_1", std::make_shared<PlantedThresholdModel>(8, 8, 1, std::vector<Bit>{0, 0, 0, 0, 1, 0, 0, 0}));
  add("planted12_6_3",
      std::make_shared<PlantedThresholdModel>(12, 6, 3, std::vector<Bit>{1, 0, 1, 0, 1, 0}));
  return zoo;
}

std::vector<ZooEntry> random_dnf_zoo(int count, int min_d, int max_d, std::uint64_t seed) {
  std::vector<ZooEntry> zoo;
  zoo.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) {
    Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(t)));
    const int d = rng.range(min_d, max_d);
    const int terms = rng.range(1, 6);
    auto model = random_dnf(d, terms, 4, rng);
    zoo.push_back(ZooEntry{"rdnf" + std::to_string(t) + "_d" + std::to_string(d), std::move(model)});
  }
  return zoo;
}

std::vector<GeneralZooEntry> general_zoo() {
  using nlohmann::json;
  std::vector<GeneralZooEntry> zoo;
  auto add = [&](std::string name, const json& spec) {
    zoo.push_back(GeneralZooEntry{std::move(name), general_model_from_json(spec)});
  };

  add("gthr2_012_3", json{{"kind", "general-threshold"}, {"d", 2}, {"space", {0, 1, 2}}, {"threshold", 3}});
  add("gthr3_012_4", json{{"kind", "general-threshold"}, {"d", 3}, {"space", {0, 1, 2}}, {"threshold", 4}});
  add("gthr4_01_2", json{{"kind", "general-threshold"}, {"d", 4}, {"space", {0, 1}}, {"threshold", 2}});
  add("gthr3_0123_5", json{{"kind", "general-threshold"}, {"d", 3}, {"space", {0, 1, 2, 3}}, {"threshold", 5}});
  add("gthr5_012_6", json{{"kind", "general-threshold"}, {"d", 5}, {"space", {0, 1, 2}}, {"threshold", 6}});
  add("gdnf2_simple",
      json{{"kind", "general-dnf"}, {"d", 2}, {"space", {0, 1, 2}}, {"terms", {{{1, 2}}, {{1, 1}, {2, 2}}}}});
  add("gdnf3_mixed",
      json{{"kind", "general-dnf"},
           {"d", 3},
           {"space", {0, 1, 2, 3}},
           {"terms", {{{1, 3}, {2, 1}}, {{3, 2}}, {{1, 1}, {2, 2}, {3, 1}}}}});
  add("gdnf4_pairs",
      json{{"kind", "general-dnf"},
           {"d", 4},
           {"space", {0, 1, 2}},
           {"terms", {{{1, 1}, {2, 1}}, {{3, 2}, {4, 2}}}}});
  add("gdnf6_wide",
      json{{"kind", "general-dnf"},
           {"d", 6},
           {"space", {0, 1}},
           {"terms", {{{1, 1}, {2, 1}}, {{3, 1}, {4, 1}, {5, 1}}, {{6, 1}}}}});
  return zoo;
}

}  // namespace monocf
