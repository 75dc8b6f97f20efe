// monocf: optimal counterfactuals for monotone black-box models.
//
// Subcommands: explain, explain-general, verify, inspect, inspect-tree,
// bench. Every report is a single UTF-8 JSON document on stdout; diagnostics
// go to stderr. Exit codes: 0 success, 1 usage/capability error, 2 no
// counterfactual exists, 3 internal invariant violation.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "monocf/baselines.hpp"
#include "monocf/bench.hpp"
#include "monocf/certificates.hpp"
#include "monocf/counterfactual.hpp"
#include "monocf/errors.hpp"
#include "monocf/general.hpp"
#include "monocf/idt.hpp"
#include "monocf/models.hpp"
#include "monocf/version.hpp"

namespace {

using monocf::json;

struct GlobalFlags {
  std::uint64_t seed = 1;
  bool trace = false;
  bool pretty = false;
  bool dedupe = false;
};

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

json base_report(const std::string& subcommand, const GlobalFlags& flags) {
  return json{{"tool", monocf::kToolName},
              {"version", monocf::kVersion},
              {"subcommand", subcommand},
              {"seed", flags.seed}};
}

void emit(json report, const GlobalFlags& flags, const Stopwatch& sw) {
  report["wall_ms"] = sw.ms();
  std::cout << (flags.pretty ? report.dump(2) : report.dump()) << "\n";
}

std::vector<int> to_one_based(const std::vector<int>& zero_based) {
  std::vector<int> out;
  out.reserve(zero_based.size());
  for (int i : zero_based) out.push_back(i + 1);
  return out;
}

json optima_json(const monocf::CounterfactualReport& r, const monocf::Instance& x_star) {
  json optima = json::array();
  for (const auto& x : r.optima) optima.push_back(x.str());
  json diffs = json::array();
  for (const auto& ds : r.diff_sets(x_star)) diffs.push_back(to_one_based(ds));
  return json{{"optima", optima}, {"diff_sets", diffs}};
}

json trace_json(const std::vector<monocf::Instance>& trace) {
  json arr = json::array();
  for (const auto& x : trace) arr.push_back(x.str());
  return arr;
}

monocf::Instance parse_instance_for(const monocf::MonotoneOracle& oracle, const std::string& s) {
  monocf::Instance x = monocf::Instance::parse(s);
  if (x.dimension() != oracle.dimension())
    throw monocf::UsageError("instance length " + std::to_string(x.dimension()) + " does not match model dimension " +
                             std::to_string(oracle.dimension()));
  return x;
}

int run_explain(const std::string& model_file, const std::string& instance, const std::string& algo,
                const GlobalFlags& flags) {
  Stopwatch sw;
  monocf::MonotoneOracle oracle(monocf::model_from_file(model_file), flags.trace, flags.dedupe);
  const monocf::Instance x_star = parse_instance_for(oracle, instance);

  monocf::CounterfactualReport result;
  if (algo == "idt")
    result = monocf::find_optimal(oracle, x_star);
  else if (algo == "ball")
    result = monocf::ball_search(oracle, x_star);
  else if (algo == "brute")
    result = monocf::brute_force_optimal(oracle, x_star);
  else
    throw monocf::UsageError("unknown algorithm \"" + algo + "\" (expected idt, ball or brute)");

  // Re-check every reported optimum against a fresh oracle before emitting.
  monocf::MonotoneOracle checker(oracle.model_ptr());
  const monocf::Bit base = checker.eval(x_star);
  for (const auto& x : result.optima)
    if (checker.eval(x) == base)
      throw monocf::InvariantViolation("reported optimum " + x.str() + " failed the fresh-oracle re-check");

  json report = base_report("explain", flags);
  report["inputs"] = json{{"model", model_file}, {"instance", instance}};
  report["algo"] = algo;
  report["distance"] = result.distance;
  report.update(optima_json(result, x_star));
  report["queries"] = result.ledger_snapshot;
  if (flags.dedupe) report["distinct_queries"] = oracle.distinct_queries();
  if (flags.trace) report["trace"] = trace_json(oracle.ledger().trace);
  emit(std::move(report), flags, sw);
  return 0;
}

int run_explain_general(const std::string& model_file, const std::string& instance, const GlobalFlags& flags) {
  Stopwatch sw;
  monocf::GeneralOracle oracle(monocf::general_model_from_file(model_file), flags.trace);
  monocf::GeneralInstance x_star = monocf::GeneralInstance::parse(instance);
  if (x_star.dimension() != oracle.dimension())
    throw monocf::UsageError("instance length " + std::to_string(x_star.dimension()) +
                             " does not match model dimension " + std::to_string(oracle.dimension()));

  const monocf::GeneralReport result = monocf::find_optimal_general(oracle, x_star);

  json report = base_report("explain-general", flags);
  report["inputs"] = json{{"model", model_file}, {"instance", instance}};
  report["distance"] = result.distance;
  json diffs = json::array();
  for (const auto& ds : result.diff_sets) diffs.push_back(to_one_based(ds));
  report["diff_sets"] = diffs;
  json reps = json::array();
  for (const auto& r : result.representatives) reps.push_back(r.str());
  report["representatives"] = reps;
  report["queries"] = result.queries;
  emit(std::move(report), flags, sw);
  return 0;
}

int run_verify(const std::string& model_file, const std::string& instance, const std::string& candidate,
               const GlobalFlags& flags) {
  Stopwatch sw;
  monocf::MonotoneOracle oracle(monocf::model_from_file(model_file), flags.trace, flags.dedupe);
  const monocf::Instance x_star = parse_instance_for(oracle, instance);
  const monocf::Instance x_prime = parse_instance_for(oracle, candidate);

  const monocf::Bit f_star = oracle.eval(x_star);
  const monocf::Bit f_prime = oracle.eval(x_prime);
  const std::vector<int> diff = monocf::delta(x_star, x_prime);
  const bool is_cf = f_star != f_prime;

  json report = base_report("verify", flags);
  report["inputs"] = json{{"model", model_file}, {"instance", instance}, {"candidate", candidate}};
  report["f_instance"] = static_cast<int>(f_star);
  report["f_candidate"] = static_cast<int>(f_prime);
  report["delta"] = to_one_based(diff);
  report["counterfactual"] = is_cf;

  if (is_cf) {
    try {
      report["minimal"] = monocf::is_minimal_counterfactual(oracle, x_star, x_prime, monocf::InstanceSet::cube());
    } catch (const monocf::CapabilityError&) {
      report["minimal"] = "unknown";  // |Delta| beyond the subset-enumeration cap
    }
    if (oracle.dimension() <= 20) {
      monocf::MonotoneOracle brute(oracle.model_ptr());
      const auto best = monocf::brute_force_optimal(brute, x_star);
      report["optimal"] = best.distance == static_cast<int>(diff.size());
    } else {
      report["optimal"] = "unknown";
    }
  } else {
    report["minimal"] = false;
    report["optimal"] = false;
  }
  report["queries"] = oracle.ledger().count;
  emit(std::move(report), flags, sw);
  return 0;
}

int run_inspect(const std::string& model_file, const std::string& reports, const GlobalFlags& flags) {
  Stopwatch sw;
  monocf::ModelPtr model = monocf::model_from_file(model_file);

  json report = base_report("inspect", flags);
  report["inputs"] = json{{"model", model_file}, {"report", reports}};

  std::vector<std::string> tokens;
  for (std::size_t pos = 0; pos <= reports.size();) {
    const std::size_t comma = reports.find(',', pos);
    tokens.push_back(reports.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (const auto& t : tokens)
    if (t != "all" && t != "sensitivity" && t != "certcomplexity" && t != "cert")
      throw monocf::UsageError("inspect: unknown report \"" + t + "\" (expected sensitivity, certcomplexity, cert)");
  const bool want_all = std::find(tokens.begin(), tokens.end(), "all") != tokens.end();
  auto wants = [&](const std::string& what) {
    return want_all || std::find(tokens.begin(), tokens.end(), what) != tokens.end();
  };

  if (wants("sensitivity")) report["S"] = monocf::sensitivity(*model);
  if (wants("certcomplexity")) {
    const auto cc = monocf::certificate_complexity(*model);
    report["C"] = cc.c;
    report["C0"] = cc.c0;
    report["C1"] = cc.c1;
  }
  if (wants("cert")) {
    monocf::MonotoneOracle oracle(model);
    const auto cert = monocf::find_certificate(oracle);
    report["cert"] =
        json{{"features", to_one_based(cert.features)}, {"witness", cert.witness.str()}, {"value", cert.value}};
    report["queries"] = oracle.ledger().count;
  }
  emit(std::move(report), flags, sw);
  return 0;
}

int run_inspect_tree(const std::string& model_file, int max_d, int s_bound, const GlobalFlags& flags) {
  Stopwatch sw;
  monocf::ModelPtr model = monocf::model_from_file(model_file);
  if (model->dimension() > max_d)
    throw monocf::CapabilityError("inspect-tree: model dimension exceeds --max-d = " + std::to_string(max_d));

  const int s = s_bound > 0 ? s_bound : monocf::sensitivity(*model);
  monocf::MonotoneOracle oracle(model);
  // Features never repeat along a path, so d always caps the depth.
  const int cap = std::min(model->dimension(), 2 * s * s + s);
  const monocf::ExplicitTree tree = monocf::materialize(oracle, cap);

  json report = base_report("inspect-tree", flags);
  report["inputs"] = json{{"model", model_file}};
  report["s_bound"] = s;
  report["depth"] = tree.depth();
  report["nodes"] = tree.node_count();
  report["leaves"] = tree.leaf_count();
  report["max_blocks_on_path"] = tree.max_blocks_on_path();
  report["queries"] = oracle.ledger().count;
  report["tree"] = tree.to_json();
  emit(std::move(report), flags, sw);
  return 0;
}

int run_bench_cmd(const std::string& config_file, const std::string& out_file, const std::string& csv_file,
                  const GlobalFlags& flags, bool seed_overridden) {
  Stopwatch sw;
  std::ifstream in(config_file);
  if (!in) throw monocf::UsageError("cannot open bench config: " + config_file);
  json config_json;
  try {
    config_json = json::parse(in);
  } catch (const json::parse_error& e) {
    throw monocf::UsageError("malformed JSON in " + config_file + ": " + e.what());
  }
  monocf::BenchConfig cfg = monocf::BenchConfig::from_json(config_json);
  if (seed_overridden) cfg.seed = flags.seed;

  const monocf::BenchReport result = monocf::run_bench(cfg);
  const json result_json = result.to_json();

  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw monocf::UsageError("cannot write report to " + out_file);
    out << result_json.dump(2) << "\n";
  }
  if (!csv_file.empty()) {
    std::ofstream csv(csv_file);
    if (!csv) throw monocf::UsageError("cannot write csv to " + csv_file);
    csv << result.to_csv();
  }

  json report = base_report("bench", flags);
  report["inputs"] = json{{"config", config_file}};
  report["seed"] = cfg.seed;
  report["report"] = result_json;
  emit(std::move(report), flags, sw);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal counterfactuals for monotone black-box models"};
  app.require_subcommand(1);
  // Let global flags (--seed, --trace, ...) appear after the subcommand too.
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "seed for randomized pieces (default 1)");
  app.add_flag("--trace", flags.trace, "record and emit the oracle query trace");
  bool json_flag = false;
  app.add_flag("--json", json_flag, "compact single-line JSON output (the default)");
  app.add_flag("--pretty", flags.pretty, "indented JSON output");
  app.add_flag("--dedupe-queries", flags.dedupe, "memoize oracle calls and report distinct counts alongside raw ones");

  std::string model_file, instance, candidate, algo = "idt", reports = "all";
  std::string config_file, out_file, csv_file;
  int max_d = 16, s_bound = 0;

  CLI::App* explain = app.add_subcommand("explain", "find all optimal counterfactuals");
  explain->add_option("--model", model_file, "ModelSpec JSON file")->required();
  explain->add_option("--instance", instance, "bit-string instance, feature 1 first")->required();
  explain->add_option("--algo", algo, "idt | ball | brute (default idt)");

  CLI::App* explain_general = app.add_subcommand("explain-general", "difference sets over a general feature space");
  explain_general->add_option("--model", model_file, "general ModelSpec JSON file")->required();
  explain_general->add_option("--instance", instance, "comma-separated coordinate values")->required();

  CLI::App* verify = app.add_subcommand("verify", "check a candidate counterfactual");
  verify->add_option("--model", model_file, "ModelSpec JSON file")->required();
  verify->add_option("--instance", instance, "bit-string instance")->required();
  verify->add_option("--candidate", candidate, "bit-string candidate counterfactual")->required();

  CLI::App* inspect = app.add_subcommand("inspect", "sensitivity / certificate-complexity measurements");
  inspect->add_option("--model", model_file, "ModelSpec JSON file")->required();
  inspect->add_option("--report", reports, "comma list of sensitivity,certcomplexity,cert (default all)");

  CLI::App* inspect_tree = app.add_subcommand("inspect-tree", "materialize the implicit decision tree");
  inspect_tree->add_option("--model", model_file, "ModelSpec JSON file")->required();
  inspect_tree->add_option("--max-d", max_d, "refuse models with larger dimension (default 16)");
  inspect_tree->add_option("--s-bound", s_bound, "sensitivity bound for the depth cap (default: measure)");

  CLI::App* bench = app.add_subcommand("bench", "query-count scaling benchmarks");
  bench->add_option("--config", config_file, "bench config JSON file")->required();
  bench->add_option("--out", out_file, "write the full report JSON here");
  bench->add_option("--csv", csv_file, "also write per-cell CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (explain->parsed()) return run_explain(model_file, instance, algo, flags);
    if (explain_general->parsed()) return run_explain_general(model_file, instance, flags);
    if (verify->parsed()) return run_verify(model_file, instance, candidate, flags);
    if (inspect->parsed()) return run_inspect(model_file, reports, flags);
    if (inspect_tree->parsed()) return run_inspect_tree(model_file, max_d, s_bound, flags);
    if (bench->parsed()) return run_bench_cmd(config_file, out_file, csv_file, flags, app.count("--seed") > 0);
  } catch (const monocf::NoCounterfactualError& e) {
    std::cerr << "monocf: " << e.what() << "\n";
    return 2;
  } catch (const monocf::InvariantViolation& e) {
    std::cerr << "monocf: internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const monocf::Error& e) {
    std::cerr << "monocf: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "monocf: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
