#include "monocf/bench.hpp"

#include <algorithm>
#include <numeric>

#include "monocf/baselines.hpp"
#include "monocf/counterfactual.hpp"
#include "monocf/errors.hpp"
#include "monocf/version.hpp"

namespace monocf {

ModelPtr make_planted(int d, int s, int delta, const std::vector<Bit>& z) {
  return std::make_shared<PlantedThresholdModel>(d, s, delta, z);
}

ModelPtr make_dictator(int d, int i) {
  if (i < 1 || i > d) throw UsageError("make_dictator: index out of range (1-based)");
  return std::make_shared<DictatorModel>(d, i - 1);
}

BenchConfig BenchConfig::from_json(const nlohmann::json& j) {
  BenchConfig cfg;
  cfg.family = j.at("family").get<std::string>();
  cfg.dims = j.at("d").get<std::vector<int>>();
  if (j.contains("S")) cfg.sensitivities = j.at("S").get<std::vector<int>>();
  if (j.contains("delta")) cfg.deltas = j.at("delta").get<std::vector<int>>();
  cfg.algos = j.at("algos").get<std::vector<std::string>>();
  cfg.trials = j.value("trials", 50);
  cfg.seed = j.value("seed", std::uint64_t{1});
  cfg.budget = j.value("budget", 0);
  cfg.fixed_z = j.value("z", std::string{});
  cfg.validate();
  return cfg;
}

nlohmann::json BenchConfig::to_json() const {
  nlohmann::json j{{"family", family}, {"d", dims},   {"algos", algos},
                   {"trials", trials}, {"seed", seed}, {"budget", budget}};
  if (!sensitivities.empty()) j["S"] = sensitivities;
  if (!deltas.empty()) j["delta"] = deltas;
  if (!fixed_z.empty()) j["z"] = fixed_z;
  return j;
}

void BenchConfig::validate() const {
  if (family != "planted" && family != "dictator")
    throw UsageError("bench: family must be \"planted\" or \"dictator\"");
  if (dims.empty() || algos.empty() || trials < 1) throw UsageError("bench: empty grid");
  if (family == "planted") {
    if (sensitivities.empty() || deltas.empty()) throw UsageError("bench: the planted family needs S and delta grids");
    for (int s : sensitivities)
      for (int dd : deltas)
        for (int d : dims)
          if (!(1 <= dd && dd <= s && s <= d)) throw UsageError("bench: need 1 <= delta <= S <= d at every grid point");
    if (!fixed_z.empty()) {
      int weight = 0;
      for (char c : fixed_z) {
        if (c != '0' && c != '1') throw UsageError("bench: z must be a 0/1 string");
        weight += c - '0';
      }
      for (int s : sensitivities)
        if (s != static_cast<int>(fixed_z.size())) throw UsageError("bench: |z| must equal S");
      for (int dd : deltas)
        if (dd != weight) throw UsageError("bench: z must have Hamming weight delta");
    }
  }
  static const std::vector<std::string> known{"idt", "ball", "brute", "ball-budget", "random-walk", "random-probe"};
  for (const auto& a : algos) {
    if (std::find(known.begin(), known.end(), a) == known.end()) throw UsageError("bench: unknown algorithm " + a);
    if ((a == "ball-budget" || a == "random-walk" || a == "random-probe") && budget < 1)
      throw UsageError("bench: strategy " + a + " needs a positive \"budget\"");
    if (a == "random-probe" && family != "planted") throw UsageError("bench: random-probe applies to the planted family");
  }
}

StrategyOutcome truncated_ball_search(MonotoneOracle& f, const Instance& x_star, int budget) {
  const int d = f.dimension();
  StrategyOutcome out;
  auto query = [&](const Instance& y) {
    out.trace.push_back(y);
    return f.eval(y);
  };
  const Bit base = query(x_star);
  std::uint64_t spent = 1;
  // Distance shells in the same lexicographic flipped-set order as
  // ball_search, cut off at the budget.
  std::vector<int> idx;
  for (int k = 1; k <= d && spent < static_cast<std::uint64_t>(budget) && !out.found; ++k) {
    idx.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      Instance y = x_star;
      for (int i : idx) y = y.flipped(i);
      if (query(y) != base) {
        out.found = y;
        ++spent;
        break;
      }
      if (++spent >= static_cast<std::uint64_t>(budget)) break;
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == d - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  out.queries = f.ledger().count;
  return out;
}

StrategyOutcome random_adjacent_walk(MonotoneOracle& f, const Instance& x_star, int budget, Rng& rng) {
  const int d = f.dimension();
  StrategyOutcome out;
  std::vector<Instance> seen;
  const Bit base = f.eval(x_star);
  out.trace.push_back(x_star);
  seen.push_back(x_star);
  std::optional<Instance> best;
  std::size_t best_dist = 0;
  for (int t = 1; t < budget; ++t) {
    const Instance& anchor = seen[static_cast<std::size_t>(rng.below(seen.size()))];
    Instance y = anchor.flipped(rng.range(0, d - 1));
    out.trace.push_back(y);
    const Bit v = f.eval(y);
    if (v != base) {
      const std::size_t dist = delta(x_star, y).size();
      if (!best || dist < best_dist) {
        best = y;
        best_dist = dist;
      }
    }
    seen.push_back(std::move(y));
  }
  out.found = best;
  out.queries = f.ledger().count;
  return out;
}

StrategyOutcome random_weight_probe(MonotoneOracle& f, const Instance& x_star, int s, int delta, int budget, Rng& rng) {
  StrategyOutcome out;
  const Bit base = f.eval(x_star);
  auto draw = [&]() {
    Instance y = x_star;
    for (int i : rng.sample(s, delta)) y = y.with(i, static_cast<Bit>(1 - x_star[i]));
    return y;
  };
  for (int t = 0; t < budget && !out.found; ++t) {
    Instance y = draw();
    out.trace.push_back(y);
    if (f.eval(y) != base) out.found = y;
  }
  if (!out.found) out.found = draw();  // the final unqueried guess
  out.queries = f.ledger().count;
  return out;
}

namespace {

QueryStats stats_of(std::vector<std::uint64_t> counts) {
  QueryStats s;
  if (counts.empty()) return s;
  std::sort(counts.begin(), counts.end());
  const std::size_t n = counts.size();
  s.median = (n % 2 == 1) ? static_cast<double>(counts[n / 2])
                          : (static_cast<double>(counts[n / 2 - 1]) + static_cast<double>(counts[n / 2])) / 2.0;
  s.mean = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0})) /
           static_cast<double>(n);
  s.max = counts.back();
  return s;
}

struct TrialInstance {
  ModelPtr model;
  Instance optimum;  // the unique optimal counterfactual from 0^d
  int s_bound;
  int delta;
};

TrialInstance draw_trial(const BenchConfig& cfg, int d, int s, int delta, Rng& rng) {
  if (cfg.family == "dictator") {
    const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
    return TrialInstance{make_dictator(d, i), Instance::zeros(d).with(i - 1, 1), 1, 1};
  }
  std::vector<Bit> z(static_cast<std::size_t>(s), 0);
  if (!cfg.fixed_z.empty())
    for (int i = 0; i < s; ++i) z[static_cast<std::size_t>(i)] = static_cast<Bit>(cfg.fixed_z[static_cast<std::size_t>(i)] - '0');
  else
    for (int i : rng.sample(s, delta)) z[static_cast<std::size_t>(i)] = 1;
  auto model = make_planted(d, s, delta, z);
  Instance opt = Instance::zeros(d);
  for (int i = 0; i < s; ++i) opt = opt.with(i, z[static_cast<std::size_t>(i)]);
  return TrialInstance{std::move(model), std::move(opt), s, delta};
}

bool is_exact_optimum_set(const CounterfactualReport& r, const TrialInstance& t) {
  return r.distance == t.delta && r.optima.size() == 1 && r.optima.front() == t.optimum;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
  cfg.validate();
  BenchReport report;
  report.seed = cfg.seed;
  report.version = kVersion;
  report.config = cfg;

  const std::vector<int> s_grid = cfg.family == "planted" ? cfg.sensitivities : std::vector<int>{1};
  const std::vector<int> delta_grid = cfg.family == "planted" ? cfg.deltas : std::vector<int>{1};

  for (int d : cfg.dims) {
    for (int s : s_grid) {
      for (int dd : delta_grid) {
        for (const std::string& algo : cfg.algos) {
          BenchCell cell;
          cell.family = cfg.family;
          cell.d = d;
          cell.s = s;
          cell.delta = dd;
          cell.algo = algo;
          cell.trials = cfg.trials;
          int successes = 0;
          for (int trial = 0; trial < cfg.trials; ++trial) {
            // One deterministic stream per (cell, trial); the same oracle is
            // drawn for every algorithm at the same grid point and trial.
            const std::uint64_t grid_key =
                Rng::mix(cfg.seed, (static_cast<std::uint64_t>(d) << 40) ^ (static_cast<std::uint64_t>(s) << 20) ^
                                       static_cast<std::uint64_t>(dd));
            Rng rng(Rng::mix(grid_key, static_cast<std::uint64_t>(trial)));
            const TrialInstance t = draw_trial(cfg, d, s, dd, rng);
            MonotoneOracle oracle(t.model);
            bool success = false;
            try {
              if (algo == "idt") {
                success = is_exact_optimum_set(find_optimal(oracle, Instance::zeros(d)), t);
              } else if (algo == "ball") {
                success = is_exact_optimum_set(ball_search(oracle, Instance::zeros(d)), t);
              } else if (algo == "brute") {
                success = is_exact_optimum_set(brute_force_optimal(oracle, Instance::zeros(d)), t);
              } else if (algo == "ball-budget") {
                const StrategyOutcome out = truncated_ball_search(oracle, Instance::zeros(d), cfg.budget);
                success = out.found && *out.found == t.optimum;
              } else if (algo == "random-walk") {
                const StrategyOutcome out = random_adjacent_walk(oracle, Instance::zeros(d), cfg.budget, rng);
                success = out.found && *out.found == t.optimum;
              } else if (algo == "random-probe") {
                const StrategyOutcome out = random_weight_probe(oracle, Instance::zeros(d), s, dd, cfg.budget, rng);
                success = out.found && *out.found == t.optimum;
              }
            } catch (const Error&) {
              ++cell.errors;
            }
            successes += success ? 1 : 0;
            cell.raw.push_back(oracle.ledger().count);
          }
          cell.queries = stats_of(cell.raw);
          cell.success_rate = static_cast<double>(successes) / static_cast<double>(cfg.trials);
          report.cells.push_back(std::move(cell));
        }
      }
    }
  }
  return report;
}

nlohmann::json BenchReport::to_json() const {
  nlohmann::json cells_json = nlohmann::json::array();
  for (const BenchCell& c : cells) {
    nlohmann::json params{{"family", c.family}, {"d", c.d}};
    if (c.family == "planted") {
      params["S"] = c.s;
      params["delta"] = c.delta;
    }
    cells_json.push_back(nlohmann::json{{"params", params},
                                        {"algo", c.algo},
                                        {"trials", c.trials},
                                        {"queries", {{"median", c.queries.median}, {"mean", c.queries.mean}, {"max", c.queries.max}}},
                                        {"success_rate", c.success_rate},
                                        {"errors", c.errors},
                                        {"raw", c.raw}});
  }
  return nlohmann::json{{"seed", seed}, {"version", version}, {"config", config.to_json()}, {"cells", cells_json}};
}

std::string BenchReport::to_csv() const {
  std::string csv = "family,d,S,delta,algo,trials,median_queries,mean_queries,max_queries,success_rate,errors\n";
  for (const BenchCell& c : cells) {
    csv += c.family + "," + std::to_string(c.d) + "," + std::to_string(c.s) + "," + std::to_string(c.delta) + "," +
           c.algo + "," + std::to_string(c.trials) + "," + std::to_string(c.queries.median) + "," +
           std::to_string(c.queries.mean) + "," + std::to_string(c.queries.max) + "," +
           std::to_string(c.success_rate) + "," + std::to_string(c.errors) + "\n";
  }
  return csv;
}

}  // namespace monocf
