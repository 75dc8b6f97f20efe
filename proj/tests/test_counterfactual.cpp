#include <doctest.h>

#include "monocf/baselines.hpp"
#include "monocf/counterfactual.hpp"
#include "monocf/errors.hpp"
#include "monocf/models.hpp"
#include "monocf/zoo.hpp"
#include "support.hpp"

using namespace monocf;

TEST_CASE("find_minimal on the worked examples") {
  SUBCASE("and3, empty restriction, budget 1") {
    MonotoneOracle f(test::dnf(3, {{1, 2, 3}}));
    const auto out = find_minimal(f, Restriction::parse("***"), Instance::parse("111"), 1, AuxInfo{});
    CHECK(test::sorted(out) == test::parse_all({"011", "101", "110"}));
  }
  SUBCASE("and3 with a forced disagreeing coordinate: the hybrid alone") {
    MonotoneOracle f(test::dnf(3, {{1, 2, 3}}));
    const auto out = find_minimal(f, Restriction::parse("0**"), Instance::parse("111"), 1, AuxInfo{});
    CHECK(out == test::parse_all({"011"}));
  }
  SUBCASE("x1 or (x2 and x3), budget 2") {
    MonotoneOracle f(test::dnf(3, {{1}, {2, 3}}));
    const auto out = find_minimal(f, Restriction::parse("***"), Instance::parse("111"), 2, AuxInfo{});
    CHECK(test::sorted(out) == test::parse_all({"001", "010"}));
  }
  SUBCASE("budget 0 finds nothing unless the hybrid already flips") {
    MonotoneOracle f(test::dnf(3, {{1, 2, 3}}));
    CHECK(find_minimal(f, Restriction::parse("***"), Instance::parse("111"), 0, AuxInfo{}).empty());
  }
}

TEST_CASE("find_minimal equals definition-driven enumeration on random walks") {
  // Draw (model, rho, k) triples with rho a legal tree path (random branch
  // choices), then compare against the test-side enumeration.
  Rng rng(61);
  int checked = 0;
  for (const auto& entry : random_dnf_zoo(25, 2, 10, 43)) {
    const int d = entry.model->dimension();
    for (int rep = 0; rep < 3; ++rep) {
      MonotoneOracle f(entry.model);
      Restriction rho = Restriction::empty(d);
      AuxInfo aux;
      const int steps = rng.range(0, 3);
      for (int t = 0; t < steps && !is_leaf(f, rho, aux); ++t) {
        const IdtQueryResult q = idt_query(f, rho, aux);
        rho = rho.with(q.feature, static_cast<Bit>(rng.bit()));
        aux = q.aux;
      }
      std::vector<Bit> bits(static_cast<std::size_t>(d));
      for (auto& b : bits) b = static_cast<Bit>(rng.bit());
      const Instance x_star{std::move(bits)};
      const int k = rng.range(0, 4);

      const auto got = test::sorted(find_minimal(f, rho, x_star, k, aux));
      const auto want = test::enumerate_minimal(*entry.model, rho, x_star, k);
      CHECK(got == want);
      ++checked;
    }
  }
  CHECK(checked >= 75);
}

TEST_CASE("find_optimal on the worked examples") {
  SUBCASE("and3") {
    MonotoneOracle f(test::dnf(3, {{1, 2, 3}}));
    const auto r = find_optimal(f, Instance::parse("111"));
    CHECK(r.optima == test::parse_all({"011", "101", "110"}));
    CHECK(r.distance == 1);
    CHECK(r.ledger_snapshot == f.ledger().count);
  }
  SUBCASE("maj3") {
    MonotoneOracle f(std::make_shared<MajorityModel>(3));
    const auto r = find_optimal(f, Instance::parse("111"));
    CHECK(r.optima == test::parse_all({"001", "010", "100"}));
    CHECK(r.distance == 2);
  }
  SUBCASE("planted threshold: the unique planted optimum") {
    MonotoneOracle f(std::make_shared<PlantedThresholdModel>(6, 4, 2, std::vector<Bit>{1, 1, 0, 0}));
    const auto r = find_optimal(f, Instance::parse("000000"));
    CHECK(r.optima == test::parse_all({"110000"}));
    CHECK(r.distance == 2);
  }
  SUBCASE("constant model") {
    const json spec = json::parse(R"({"kind":"decision-tree","d":2,"tree":{"leaf":1}})");
    MonotoneOracle f(model_from_json(spec));
    CHECK_THROWS_AS(find_optimal(f, Instance::parse("11")), NoCounterfactualError);
    CHECK(f.ledger().count == 2);  // detected with the two endpoint queries
  }
}

TEST_CASE("diff sets are aligned with the optima") {
  MonotoneOracle f(test::dnf(3, {{1, 2, 3}}));
  const auto r = find_optimal(f, Instance::parse("111"));
  const auto ds = r.diff_sets(Instance::parse("111"));
  REQUIRE(ds.size() == r.optima.size());
  CHECK(ds[0] == std::vector<int>{0});  // 011
  CHECK(ds[1] == std::vector<int>{1});  // 101
  CHECK(ds[2] == std::vector<int>{2});  // 110
}

TEST_CASE("find_optimal matches the brute-force oracle on random models") {
  Rng rng(71);
  for (const auto& entry : random_dnf_zoo(60, 2, 12, 47)) {
    CAPTURE(entry.name);
    const int d = entry.model->dimension();
    std::vector<Bit> bits(static_cast<std::size_t>(d));
    for (auto& b : bits) b = static_cast<Bit>(rng.bit());
    const Instance x_star{std::move(bits)};
    MonotoneOracle a(entry.model), b(entry.model);
    const auto fast = find_optimal(a, x_star);
    const auto brute = brute_force_optimal(b, x_star);
    CHECK(fast.optima == brute.optima);
    CHECK(fast.distance == brute.distance);
  }
}

TEST_CASE("everything find_optimal returns is minimal over the whole cube") {
  Rng rng(73);
  for (const auto& entry : random_dnf_zoo(20, 2, 10, 53)) {
    const int d = entry.model->dimension();
    std::vector<Bit> bits(static_cast<std::size_t>(d));
    for (auto& b : bits) b = static_cast<Bit>(rng.bit());
    const Instance x_star{std::move(bits)};
    MonotoneOracle f(entry.model);
    const auto r = find_optimal(f, x_star);
    for (const auto& x : r.optima) {
      MonotoneOracle checker(entry.model);
      CHECK(is_minimal_counterfactual(checker, x_star, x, InstanceSet::cube()));
    }
  }
}

TEST_CASE("is_minimal_counterfactual") {
  MonotoneOracle and3(test::dnf(3, {{1, 2, 3}}));
  CHECK(is_minimal_counterfactual(and3, Instance::parse("111"), Instance::parse("011"), InstanceSet::cube()));
  CHECK(!is_minimal_counterfactual(and3, Instance::parse("111"), Instance::parse("001"), InstanceSet::cube()));
  CHECK(!is_minimal_counterfactual(and3, Instance::parse("111"), Instance::parse("111"), InstanceSet::cube()));

  MonotoneOracle mixed(test::dnf(3, {{1}, {2, 3}}));
  CHECK(!is_minimal_counterfactual(mixed, Instance::parse("111"), Instance::parse("000"), InstanceSet::cube()));

  // Relative to a restricted set, the subset witness may be outside I.
  MonotoneOracle and3b(test::dnf(3, {{1, 2, 3}}));
  const auto I = InstanceSet::explicit_set(test::parse_all({"001", "111"}));
  CHECK(is_minimal_counterfactual(and3b, Instance::parse("111"), Instance::parse("001"), I));
}

TEST_CASE("the minimality predicate agrees pointwise with set enumeration") {
  // Two independent readings of the same definition: the subset-enumeration
  // predicate and the full-set filter must classify every member of I alike.
  Rng rng(83);
  for (const auto& entry : random_dnf_zoo(12, 2, 6, 67)) {
    const int d = entry.model->dimension();
    std::vector<Bit> cells(static_cast<std::size_t>(d));
    for (auto& c : cells) c = static_cast<Bit>(rng.below(3));
    const Restriction rho{std::move(cells)};
    const Instance x_star = Instance::from_mask(static_cast<std::uint32_t>(rng.below(1u << d)), d);
    const int k = rng.range(0, d);
    const auto I = InstanceSet::around(rho, x_star, k);
    const auto want = test::enumerate_minimal(*entry.model, rho, x_star, k);

    const Instance anchor = overwrite(x_star, rho);
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      const Instance y = Instance::from_mask(mask, d);
      if (!rho.consistent(y) || static_cast<int>(delta(anchor, y).size()) > k) continue;
      MonotoneOracle f(entry.model);
      const bool predicate = is_minimal_counterfactual(f, x_star, y, I);
      const bool enumerated = std::binary_search(want.begin(), want.end(), y);
      CHECK(predicate == enumerated);
    }
  }
}

TEST_CASE("the subset-enumeration cap guards minimality checks") {
  MonotoneOracle f(std::make_shared<DictatorModel>(22, 0));
  CHECK_THROWS_AS(is_minimal_counterfactual(f, Instance::zeros(22), Instance::ones(22), InstanceSet::cube()),
                  CapabilityError);
}

TEST_CASE("recursion accounting: at most 2 (h+1)^k IDT operations and direct queries") {
  for (const auto& entry : standard_zoo(12)) {
    CAPTURE(entry.name);
    MonotoneOracle m(entry.model);
    const int h = materialize(m, entry.model->dimension()).depth();
    for (int k = 0; k <= 3; ++k) {
      MonotoneOracle f(entry.model);
      FindStats stats;
      find_minimal(f, Restriction::empty(entry.model->dimension()), Instance::ones(entry.model->dimension()), k,
                   AuxInfo{}, &stats);
      double bound = 2;
      for (int i = 0; i < k; ++i) bound *= h + 1;
      CHECK(static_cast<double>(stats.idt_ops) <= bound);
      CHECK(static_cast<double>(stats.direct_queries) <= bound);
    }
  }
}

TEST_CASE("end-to-end ledger bound from the explicit certificate costs") {
  auto ceil_log2 = [](int d) {
    int bits = 0;
    while ((1 << bits) < d) ++bits;
    return bits;
  };
  Rng rng(79);
  for (const auto& entry : standard_zoo(12)) {
    CAPTURE(entry.name);
    const int d = entry.model->dimension();
    const int s = sensitivity(*entry.model);
    std::vector<Bit> bits(static_cast<std::size_t>(d));
    for (auto& b : bits) b = static_cast<Bit>(rng.bit());
    const Instance x_star{std::move(bits)};
    MonotoneOracle f(entry.model);
    try {
      const auto r = find_optimal(f, x_star);
      const double per_op = 2.0 * s * ceil_log2(d) + 4.0;
      double growth = 1;
      for (int i = 0; i <= r.distance; ++i) growth *= 2.0 * s * s + 1.0;
      CHECK(static_cast<double>(f.ledger().count) <= 4.0 * growth * per_op);
    } catch (const NoCounterfactualError&) {
      // a constant model never reaches here in the zoo
      CHECK(false);
    }
  }
}
