#include <doctest.h>

#include <cmath>

#include "monocf/baselines.hpp"
#include "monocf/bench.hpp"
#include "monocf/certificates.hpp"
#include "monocf/errors.hpp"
#include "support.hpp"

using namespace monocf;

TEST_CASE("make_planted") {
  SUBCASE("definition values") {
    auto f = make_planted(6, 4, 2, {1, 1, 0, 0});
    CHECK(f->value(Instance::parse("110000")) == 1);
    CHECK(f->value(Instance::parse("100000")) == 0);
    CHECK(f->value(Instance::parse("111000")) == 1);
  }
  SUBCASE("monotone with S(f) <= S, unique planted optimum") {
    auto f = make_planted(6, 4, 2, {1, 1, 0, 0});
    CHECK(!check_monotone_exhaustive(*f).has_value());
    CHECK(sensitivity(*f) <= 4);
    MonotoneOracle oracle(f);
    const auto r = brute_force_optimal(oracle, Instance::parse("000000"));
    CHECK(r.optima == test::parse_all({"110000"}));
    CHECK(r.distance == 2);
  }
  SUBCASE("S = d with delta 1 plants a single coordinate") {
    auto f = make_planted(8, 8, 1, {0, 0, 0, 0, 1, 0, 0, 0});
    MonotoneOracle oracle(f);
    const auto r = brute_force_optimal(oracle, Instance::parse("00000000"));
    CHECK(r.optima == test::parse_all({"00001000"}));
    CHECK(r.distance == 1);
  }
  SUBCASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS(make_planted(6, 4, 0, {0, 0, 0, 0}), UsageError);        // delta = 0
    CHECK_THROWS_AS(make_planted(6, 4, 2, {1, 0, 0, 0}), UsageError);        // wrong weight
    CHECK_THROWS_AS(make_planted(6, 4, 2, {1, 1, 0}), UsageError);           // wrong length
    CHECK_THROWS_AS(make_planted(3, 4, 2, {1, 1, 0, 0}), UsageError);        // S > d
  }
}

TEST_CASE("make_dictator") {
  auto f = make_dictator(5, 3);
  CHECK(f->value(Instance::parse("00100")) == 1);
  CHECK(sensitivity(*f) == 1);
  MonotoneOracle oracle(f);
  const auto r = brute_force_optimal(oracle, Instance::parse("00000"));
  CHECK(r.optima == test::parse_all({"00100"}));
  CHECK_THROWS_AS(make_dictator(5, 0), UsageError);
  CHECK_THROWS_AS(make_dictator(5, 6), UsageError);
}

TEST_CASE("planted validity across random draws") {
  Rng rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = rng.range(4, 14);
    const int s = rng.range(2, d);
    const int delta = rng.range(1, s);
    std::vector<Bit> z(static_cast<std::size_t>(s), 0);
    for (int i : rng.sample(s, delta)) z[static_cast<std::size_t>(i)] = 1;
    auto f = make_planted(d, s, delta, z);
    CAPTURE(d);
    CAPTURE(s);
    CAPTURE(delta);
    CHECK(!check_monotone_exhaustive(*f).has_value());
    CHECK(sensitivity(*f) <= s);
    MonotoneOracle oracle(f);
    const auto r = brute_force_optimal(oracle, Instance::zeros(d));
    CHECK(r.distance == delta);
    REQUIRE(r.optima.size() == 1);
    Instance expected = Instance::zeros(d);
    for (int i = 0; i < s; ++i) expected = expected.with(i, z[static_cast<std::size_t>(i)]);
    CHECK(r.optima.front() == expected);
  }
}

TEST_CASE("budgeted strategies") {
  SUBCASE("truncated ball search stays within budget and is local") {
    auto f = make_dictator(50, 30);
    MonotoneOracle oracle(f);
    const StrategyOutcome out = truncated_ball_search(oracle, Instance::zeros(50), 20);
    CHECK(out.queries <= 20);
    CHECK(!out.found);  // coordinate 30 is beyond the first 19 flips
    CHECK(validate_local_trace(out.trace, Instance::zeros(50)));

    MonotoneOracle oracle2(make_dictator(50, 5));
    const StrategyOutcome hit = truncated_ball_search(oracle2, Instance::zeros(50), 20);
    REQUIRE(hit.found.has_value());
    CHECK(*hit.found == Instance::zeros(50).with(4, 1));
  }
  SUBCASE("random walk is local and respects its budget") {
    Rng rng(5);
    auto f = make_dictator(40, 7);
    MonotoneOracle oracle(f);
    const StrategyOutcome out = random_adjacent_walk(oracle, Instance::zeros(40), 25, rng);
    CHECK(out.queries == 25);
    CHECK(validate_local_trace(out.trace, Instance::zeros(40)));
  }
  SUBCASE("weight probes query only weight-delta flips of the first S coordinates") {
    Rng rng(6);
    auto f = make_planted(12, 6, 2, {1, 0, 1, 0, 0, 0});
    MonotoneOracle oracle(f);
    const StrategyOutcome out = random_weight_probe(oracle, Instance::zeros(12), 6, 2, 10, rng);
    CHECK(out.queries <= 11);
    for (const Instance& y : out.trace) {
      int ones = 0;
      for (int i = 0; i < 12; ++i) {
        if (y[i]) CHECK(i < 6);
        ones += y[i];
      }
      if (y != Instance::zeros(12)) CHECK(ones == 2);
    }
  }
}

TEST_CASE("structure-blind probing succeeds with frequency at most (q+1)/C(S,delta) + 3 sigma") {
  // The planted instance hides z among the C(S, delta) weight-delta patterns;
  // probing without structure cannot beat (q+1)/C(S,delta) on average.
  BenchConfig cfg;
  cfg.family = "planted";
  cfg.dims = {16};
  cfg.sensitivities = {8};
  cfg.deltas = {3};  // C(8,3) = 56
  cfg.algos = {"random-probe"};
  cfg.trials = 1000;
  cfg.budget = 10;
  cfg.seed = 0x5AFE5EEDull;
  const BenchReport report = run_bench(cfg);
  REQUIRE(report.cells.size() == 1);
  const double p = (cfg.budget + 1) / 56.0;
  const double sigma = std::sqrt(p * (1 - p) / cfg.trials);
  CHECK(report.cells[0].success_rate <= p + 3 * sigma);
  CHECK(report.cells[0].success_rate > 0);  // it does sometimes get lucky
}

TEST_CASE("dictator idt medians stay under the frozen 3.5 log2(d) curve") {
  // First-run measurements (docs/scaling_baseline.md): 19/20/21 queries at
  // d = 64/128/256, one extra query per doubling; alpha frozen at 3.5.
  BenchConfig cfg;
  cfg.family = "dictator";
  cfg.dims = {64, 128, 256};
  cfg.algos = {"idt"};
  cfg.trials = 50;
  cfg.seed = 0xD1C7ull;
  const BenchReport report = run_bench(cfg);
  for (const auto& cell : report.cells) {
    CAPTURE(cell.d);
    const double log2d = std::log2(static_cast<double>(cell.d));
    CHECK(cell.queries.median <= 3.5 * log2d);
    CHECK(cell.success_rate == 1.0);
  }
}

TEST_CASE("run_bench is reproducible byte for byte") {
  BenchConfig cfg;
  cfg.family = "planted";
  cfg.dims = {16, 32};
  cfg.sensitivities = {4};
  cfg.deltas = {2};
  cfg.algos = {"idt", "ball"};
  cfg.trials = 5;
  cfg.seed = 12345;

  const std::string once = run_bench(cfg).to_json().dump();
  const std::string twice = run_bench(cfg).to_json().dump();
  CHECK(once == twice);

  cfg.seed = 54321;
  CHECK(run_bench(cfg).to_json().dump() != once);
}

TEST_CASE("bench cells carry raw counts and full success at desk scale") {
  BenchConfig cfg;
  cfg.family = "dictator";
  cfg.dims = {32};
  cfg.algos = {"idt", "ball"};
  cfg.trials = 8;
  cfg.seed = 7;
  const BenchReport report = run_bench(cfg);
  REQUIRE(report.cells.size() == 2);
  for (const auto& cell : report.cells) {
    CHECK(cell.raw.size() == 8);
    CHECK(cell.success_rate == 1.0);
    CHECK(cell.errors == 0);
    CHECK(cell.queries.median > 0);
  }
}

TEST_CASE("bench config validation") {
  BenchConfig cfg;
  cfg.family = "planted";
  cfg.dims = {8};
  cfg.sensitivities = {4};
  cfg.deltas = {5};  // delta > S
  cfg.algos = {"idt"};
  CHECK_THROWS_AS(cfg.validate(), UsageError);

  cfg.deltas = {2};
  CHECK_NOTHROW(cfg.validate());

  cfg.algos = {"ball-budget"};  // needs a budget
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.budget = 10;
  CHECK_NOTHROW(cfg.validate());

  BenchConfig bad = cfg;
  bad.family = "mystery";
  CHECK_THROWS_AS(bad.validate(), UsageError);
}

TEST_CASE("a fixed z pins every planted trial") {
  BenchConfig cfg;
  cfg.family = "planted";
  cfg.dims = {12};
  cfg.sensitivities = {4};
  cfg.deltas = {2};
  cfg.algos = {"brute"};
  cfg.trials = 3;
  cfg.seed = 2;
  cfg.fixed_z = "1010";
  const BenchReport report = run_bench(cfg);
  // With z fixed the oracle is identical across trials, so the brute counts
  // coincide exactly.
  REQUIRE(report.cells.size() == 1);
  CHECK(report.cells[0].raw[0] == report.cells[0].raw[1]);
  CHECK(report.cells[0].raw[1] == report.cells[0].raw[2]);
  CHECK(report.cells[0].success_rate == 1.0);

  cfg.fixed_z = "11000";  // wrong length
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.fixed_z = "1110";  // wrong weight
  CHECK_THROWS_AS(cfg.validate(), UsageError);
}

TEST_CASE("bench config JSON round trip") {
  const json j{{"family", "planted"}, {"d", {32, 64}}, {"S", {8}},      {"delta", {2}},
               {"algos", {"idt"}},    {"trials", 3},   {"seed", 99},    {"budget", 0}};
  const BenchConfig cfg = BenchConfig::from_json(j);
  CHECK(cfg.dims == std::vector<int>{32, 64});
  CHECK(cfg.seed == 99);
  const BenchConfig again = BenchConfig::from_json(cfg.to_json());
  CHECK(again.to_json() == cfg.to_json());
}
