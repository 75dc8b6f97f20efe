#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "monocf/models.hpp"
#include "monocf/report.hpp"

namespace monocf {

/// f(x) = 1 iff at least delta+1 of the first s coordinates are 1, or the
/// first s coordinates equal z. S(f) <= s, and from 0^d the instance z||0 is
/// the unique optimal counterfactual, at distance delta. Parameter violations
/// (including the degenerate delta = 0) raise UsageError.
ModelPtr make_planted(int d, int s, int delta, const std::vector<Bit>& z);

/// f(x) = x_i (1-based i). S(f) = 1; from 0^d the unique optimal
/// counterfactual is e_i.
ModelPtr make_dictator(int d, int i);

struct BenchConfig {
  std::string family;              // "planted" | "dictator"
  std::vector<int> dims;           // d grid
  std::vector<int> sensitivities;  // S grid (planted only)
  std::vector<int> deltas;         // Delta grid (planted only)
  std::vector<std::string> algos;  // idt | ball | brute | ball-budget | random-walk | random-probe
  int trials = 50;
  std::uint64_t seed = 1;
  int budget = 0;          // q, required by the budgeted strategies
  std::string fixed_z;     // planted only: use this z for every trial instead of drawing one

  static BenchConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  void validate() const;
};

struct QueryStats {
  double median = 0;
  double mean = 0;
  std::uint64_t max = 0;
};

struct BenchCell {
  std::string family;
  int d = 0;
  int s = 0;
  int delta = 0;
  std::string algo;
  int trials = 0;
  QueryStats queries;
  double success_rate = 0;
  std::vector<std::uint64_t> raw;  // per-trial ledger counts, trial order
  int errors = 0;                  // trials that ended in an exception
};

struct BenchReport {
  std::uint64_t seed = 0;
  std::string version;
  BenchConfig config;
  std::vector<BenchCell> cells;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Runs every (grid point, algo) cell for `trials` seeded trials: a fresh
/// oracle per trial (uniform random z, resp. dictator index), x* = 0^d, and
/// the chosen algorithm. Identical config + seed reproduce the report
/// byte-for-byte. Per-trial errors are recorded in the cell, not fatal.
BenchReport run_bench(const BenchConfig& cfg);

/// Single budgeted-strategy outcome, exposed for the lower-bound property
/// tests: `found` is the returned candidate (if any), `queries` the ledger
/// count, and the trace is local by construction.
struct StrategyOutcome {
  std::optional<Instance> found;
  std::uint64_t queries = 0;
  std::vector<Instance> trace;
};

/// Ball search truncated after `budget` queries; returns the first
/// counterfactual reached, if any.
StrategyOutcome truncated_ball_search(MonotoneOracle& f, const Instance& x_star, int budget);

/// Local random walk: every query after x* flips one random coordinate of a
/// random earlier query; returns the closest counterfactual it stumbled on.
StrategyOutcome random_adjacent_walk(MonotoneOracle& f, const Instance& x_star, int budget, Rng& rng);

/// The structure-blind prober for the planted family: `budget` uniform
/// weight-delta probes of the first s coordinates, then one final uniform
/// guess if none hit.
StrategyOutcome random_weight_probe(MonotoneOracle& f, const Instance& x_star, int s, int delta, int budget, Rng& rng);

}  // namespace monocf
