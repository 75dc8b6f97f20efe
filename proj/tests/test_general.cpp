#include <doctest.h>

#include "monocf/certificates.hpp"
#include "monocf/counterfactual.hpp"
#include "monocf/errors.hpp"
#include "monocf/general.hpp"
#include "monocf/zoo.hpp"
#include "support.hpp"

using namespace monocf;

namespace {

GeneralModelPtr threshold_012(int d, int threshold) {
  return general_model_from_json(
      json{{"kind", "general-threshold"}, {"d", d}, {"space", {0, 1, 2}}, {"threshold", threshold}});
}

}  // namespace

TEST_CASE("snapping") {
  const FeatureSpace space({0, 1, 2});
  const GeneralInstance x({1, 0});
  CHECK(snap_up(space, x, Instance::parse("10")) == GeneralInstance({2, 0}));
  CHECK(snap_down(space, x, Instance::parse("10")) == GeneralInstance({1, 0}));
  CHECK(snap_up(space, x, Instance::parse("11")) == GeneralInstance({2, 2}));
  CHECK(snap_down(space, x, Instance::parse("11")) == x);
  CHECK(snap_down(space, x, Instance::parse("00")) == GeneralInstance({0, 0}));
}

TEST_CASE("snap sandwich: down <= x <= up, exhaustively on a small space") {
  const FeatureSpace space({0, 1, 2});
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (std::uint32_t mask = 0; mask < 4; ++mask) {
        const GeneralInstance x({a, b});
        const Instance y = Instance::from_mask(mask, 2);
        const GeneralInstance up = snap_up(space, x, y);
        const GeneralInstance down = snap_down(space, x, y);
        for (int i = 0; i < 2; ++i) {
          CHECK(down[i] <= x[i]);
          CHECK(x[i] <= up[i]);
        }
      }
}

TEST_CASE("the reduction of a threshold model is the expected boolean function") {
  GeneralOracle f(threshold_012(2, 3));
  MonotoneOracle fx = reduce(f, GeneralInstance({0, 0}));
  CHECK(f.ledger().count == 1);  // the cached f(x) evaluation
  // f_x(y) = [y has >= 2 ones] on the 4 boolean points.
  CHECK(fx.eval(Instance::parse("00")) == 0);
  CHECK(fx.eval(Instance::parse("01")) == 0);
  CHECK(fx.eval(Instance::parse("10")) == 0);
  CHECK(fx.eval(Instance::parse("11")) == 1);
}

TEST_CASE("reduction endpoints return f(x)") {
  for (const auto& entry : general_zoo()) {
    CAPTURE(entry.name);
    const int d = entry.model->dimension();
    const FeatureSpace& space = entry.model->space();
    const GeneralInstance probe = GeneralInstance::constant(d, space.values()[space.size() / 2]);
    GeneralOracle f(entry.model);
    const Bit fx = f.eval(probe);
    MonotoneOracle reduced_oracle(reduced_model(entry.model, probe, fx));
    if (fx == 1)
      CHECK(reduced_oracle.eval(Instance::ones(d)) == 1);
    else
      CHECK(reduced_oracle.eval(Instance::zeros(d)) == 0);
  }
}

TEST_CASE("reduced models are monotone") {
  for (const auto& entry : general_zoo()) {
    CAPTURE(entry.name);
    if (entry.model->dimension() > 8) continue;
    const FeatureSpace& space = entry.model->space();
    for (int v : space.values()) {
      const GeneralInstance x = GeneralInstance::constant(entry.model->dimension(), v);
      const Bit fx = entry.model->value(x);
      CHECK(!check_monotone_exhaustive(*reduced_model(entry.model, x, fx)).has_value());
    }
  }
}

TEST_CASE("find_optimal_general on the worked examples") {
  SUBCASE("threshold over {0,1,2}^2 from the origin") {
    GeneralOracle f(threshold_012(2, 3));
    const GeneralReport r = find_optimal_general(f, GeneralInstance({0, 0}));
    CHECK(r.distance == 2);
    CHECK(r.diff_sets == std::vector<std::vector<int>>{{0, 1}});
    REQUIRE(r.representatives.size() == 1);
    CHECK(r.representatives[0] == GeneralInstance({2, 2}));
  }
  SUBCASE("[x1 >= 1] from (0, 2)") {
    GeneralOracle f(general_model_from_json(json{
        {"kind", "general-dnf"}, {"d", 2}, {"space", {0, 1, 2}}, {"terms", {{{1, 1}}}}}));
    const GeneralReport r = find_optimal_general(f, GeneralInstance({0, 2}));
    CHECK(r.distance == 1);
    CHECK(r.diff_sets == std::vector<std::vector<int>>{{0}});
  }
  SUBCASE("boolean spaces reduce to the boolean engine") {
    GeneralOracle f(general_model_from_json(json{
        {"kind", "general-threshold"}, {"d", 3}, {"space", {0, 1}}, {"threshold", 2}}));
    const GeneralReport r = find_optimal_general(f, GeneralInstance({1, 1, 0}));
    // f(1,1,0) = 1; optima drop one of the two ones.
    CHECK(r.distance == 1);
    CHECK(r.diff_sets == std::vector<std::vector<int>>{{0}, {1}});
  }
  SUBCASE("constant models have no counterfactual") {
    GeneralOracle f(threshold_012(2, 0));  // sum >= 0 always
    CHECK_THROWS_AS(find_optimal_general(f, GeneralInstance({1, 1})), NoCounterfactualError);
  }
}

TEST_CASE("reduction agrees with brute force over the whole general zoo") {
  for (const auto& entry : general_zoo()) {
    CAPTURE(entry.name);
    const int d = entry.model->dimension();
    const FeatureSpace& space = entry.model->space();
    CHECK(check_general_monotone(*entry.model));

    // Every x in X^d (the zoo keeps |X|^d small).
    std::vector<int> ranks(static_cast<std::size_t>(d), 0);
    bool more = true;
    while (more) {
      std::vector<int> coords(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) coords[static_cast<std::size_t>(i)] = space.values()[static_cast<std::size_t>(ranks[static_cast<std::size_t>(i)])];
      const GeneralInstance x_star(std::move(coords));

      GeneralOracle fast_oracle(entry.model), brute_oracle(entry.model);
      const GeneralReport fast = find_optimal_general(fast_oracle, x_star);
      const GeneralReport brute = brute_force_optimal_general(brute_oracle, x_star);
      CHECK(fast.distance == brute.distance);
      CHECK(fast.diff_sets == brute.diff_sets);

      // Each representative really is an optimal counterfactual.
      const Bit base = entry.model->value(x_star);
      for (std::size_t i = 0; i < fast.representatives.size(); ++i) {
        CHECK(entry.model->value(fast.representatives[i]) != base);
        std::vector<int> diff;
        for (int c = 0; c < d; ++c)
          if (fast.representatives[i][c] != x_star[c]) diff.push_back(c);
        CHECK(diff == fast.diff_sets[i]);
      }

      more = false;
      for (int i = 0; i < d && !more; ++i) {
        if (++ranks[static_cast<std::size_t>(i)] < space.size())
          more = true;
        else
          ranks[static_cast<std::size_t>(i)] = 0;
      }
    }
  }
}

TEST_CASE("over a boolean space the reduction agrees with the boolean engine") {
  // A {0,1} space model and its literal DnfModel twin must produce identical
  // diff sets through either entry point.
  const auto general = general_model_from_json(json{
      {"kind", "general-dnf"}, {"d", 4}, {"space", {0, 1}}, {"terms", {{{1, 1}, {2, 1}}, {{3, 1}, {4, 1}}}}});
  const auto boolean = test::dnf(4, {{1, 2}, {3, 4}});
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    const Instance x = Instance::from_mask(mask, 4);
    std::vector<int> coords;
    for (int i = 0; i < 4; ++i) coords.push_back(x[i]);
    GeneralOracle g(general);
    MonotoneOracle b(boolean);
    const GeneralReport via_reduction = find_optimal_general(g, GeneralInstance(coords));
    const CounterfactualReport direct = find_optimal(b, x);
    CHECK(via_reduction.distance == direct.distance);
    auto direct_diffs = direct.diff_sets(x);
    std::sort(direct_diffs.begin(), direct_diffs.end());
    CHECK(via_reduction.diff_sets == direct_diffs);
  }
}

TEST_CASE("S(f_x) <= S(f) on the general zoo") {
  for (const auto& entry : general_zoo()) {
    CAPTURE(entry.name);
    if (entry.model->dimension() > 6) continue;
    const int sf = general_sensitivity(*entry.model);
    const FeatureSpace& space = entry.model->space();
    for (int v : space.values()) {
      const GeneralInstance x = GeneralInstance::constant(entry.model->dimension(), v);
      const Bit fx = entry.model->value(x);
      CHECK(sensitivity(*reduced_model(entry.model, x, fx)) <= sf);
    }
  }
}

TEST_CASE("general instance parsing") {
  CHECK(GeneralInstance::parse("0,2,1") == GeneralInstance({0, 2, 1}));
  CHECK(GeneralInstance::parse("5") == GeneralInstance({5}));
  CHECK(GeneralInstance::parse("-1,3") == GeneralInstance({-1, 3}));
  CHECK_THROWS_AS(GeneralInstance::parse(""), UsageError);
  CHECK_THROWS_AS(GeneralInstance::parse("1,,2"), UsageError);
  CHECK_THROWS_AS(GeneralInstance::parse("1,x"), UsageError);
  CHECK(GeneralInstance({0, 2}).str() == "0,2");
}

TEST_CASE("general oracle rejects off-space values and counts queries") {
  GeneralOracle f(threshold_012(2, 3));
  CHECK_THROWS_AS(f.eval(GeneralInstance({0, 7})), UsageError);
  CHECK(f.ledger().count == 0);
  CHECK(f.eval(GeneralInstance({2, 2})) == 1);
  CHECK(f.ledger().count == 1);
}
