#include "monocf/general.hpp"

#include <algorithm>
#include <fstream>

#include "monocf/counterfactual.hpp"
#include "monocf/errors.hpp"

namespace monocf {

FeatureSpace::FeatureSpace(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw UsageError("feature space must be nonempty");
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i - 1] >= values_[i]) throw UsageError("feature space values must be strictly increasing");
}

bool FeatureSpace::contains(int v) const { return std::binary_search(values_.begin(), values_.end(), v); }

GeneralInstance GeneralInstance::parse(const std::string& s) {
  if (s.empty()) throw UsageError("general instance string is empty");
  std::vector<int> coords;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      coords.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("general instance: bad coordinate '" + tok + "' in '" + s + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return GeneralInstance(std::move(coords));
}

GeneralInstance GeneralInstance::with(int i, int v) const {
  GeneralInstance copy = *this;
  copy.coords_[static_cast<std::size_t>(i)] = v;
  return copy;
}

std::string GeneralInstance::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(coords_[i]);
  }
  return s;
}

GeneralOracle::GeneralOracle(GeneralModelPtr model, bool tracing) : model_(std::move(model)) {
  ledger_.tracing = tracing;
}

Bit GeneralOracle::eval(const GeneralInstance& x) {
  if (x.dimension() != dimension())
    throw UsageError("eval: general instance length " + std::to_string(x.dimension()) +
                     " does not match oracle dimension " + std::to_string(dimension()));
  for (int i = 0; i < x.dimension(); ++i)
    if (!space().contains(x[i]))
      throw UsageError("eval: coordinate value " + std::to_string(x[i]) + " is not in the feature space");
  ++ledger_.count;
  if (ledger_.tracing) ledger_.trace.push_back(x);
  return model_->value(x);
}

GeneralInstance snap_up(const FeatureSpace& space, const GeneralInstance& x, const Instance& y) {
  if (x.dimension() != y.dimension()) throw UsageError("snap_up: length mismatch");
  std::vector<int> coords(x.coords());
  for (int i = 0; i < x.dimension(); ++i)
    if (y[i]) coords[static_cast<std::size_t>(i)] = space.top();
  return GeneralInstance(std::move(coords));
}

GeneralInstance snap_down(const FeatureSpace& space, const GeneralInstance& x, const Instance& y) {
  if (x.dimension() != y.dimension()) throw UsageError("snap_down: length mismatch");
  std::vector<int> coords(x.coords());
  for (int i = 0; i < x.dimension(); ++i)
    if (!y[i]) coords[static_cast<std::size_t>(i)] = space.bottom();
  return GeneralInstance(std::move(coords));
}

namespace {

class ReducedModel : public Model {
public:
  ReducedModel(GeneralModelPtr f, GeneralInstance x, Bit f_of_x) : f_(std::move(f)), x_(std::move(x)), fx_(f_of_x) {}

  int dimension() const override { return f_->dimension(); }

  Bit value(const Instance& y) const override {
    // f(x*) = 1 snaps selected-away features to the bottom, f(x*) = 0 to the
    // top; either way y <= y' implies snapped(y) <= snapped(y').
    const GeneralInstance snapped = fx_ ? snap_down(f_->space(), x_, y) : snap_up(f_->space(), x_, y);
    return f_->value(snapped);
  }

  std::string name() const override { return "reduced(" + f_->name() + ")"; }

private:
  GeneralModelPtr f_;
  GeneralInstance x_;
  Bit fx_;
};

}  // namespace

ModelPtr reduced_model(GeneralModelPtr f, const GeneralInstance& x, Bit f_of_x) {
  return std::make_shared<ReducedModel>(std::move(f), x, f_of_x);
}

MonotoneOracle reduce(GeneralOracle& f, const GeneralInstance& x) {
  const Bit fx = f.eval(x);
  return MonotoneOracle(reduced_model(f.model_ptr(), x, fx));
}

GeneralReport find_optimal_general(GeneralOracle& f, const GeneralInstance& x_star) {
  if (x_star.dimension() != f.dimension()) throw UsageError("find_optimal_general: instance dimension mismatch");
  const int d = f.dimension();

  const Bit fx = f.eval(x_star);
  MonotoneOracle boolean(reduced_model(f.model_ptr(), x_star, fx));
  const CounterfactualReport inner = find_optimal(boolean, Instance::constant(d, fx));

  GeneralReport report;
  report.distance = inner.distance;
  report.queries = f.ledger().count + boolean.ledger().count;  // the construction query + one f query per f_x query
  for (const Instance& y : inner.optima) {
    // y differs from f(x*)^d exactly on Delta(x*, x') of the corresponding
    // general optimum, and the snapped hybrid realizes that optimum.
    std::vector<int> diff;
    for (int i = 0; i < d; ++i)
      if (y[i] != fx) diff.push_back(i);
    report.diff_sets.push_back(std::move(diff));
    report.representatives.push_back(fx ? snap_down(f.space(), x_star, y) : snap_up(f.space(), x_star, y));
  }
  // find_optimal sorts optima lexicographically; keep diff sets in a stable
  // set order of their own.
  std::vector<std::size_t> order(report.diff_sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return report.diff_sets[a] < report.diff_sets[b]; });
  GeneralReport sorted;
  sorted.distance = report.distance;
  sorted.queries = report.queries;
  for (std::size_t i : order) {
    sorted.diff_sets.push_back(std::move(report.diff_sets[i]));
    sorted.representatives.push_back(std::move(report.representatives[i]));
  }
  return sorted;
}

namespace {

// Mixed-radix enumeration of X^d via rank vectors.
bool next_point(std::vector<int>& ranks, int radix) {
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (++ranks[i] < radix) return true;
    ranks[i] = 0;
  }
  return false;
}

GeneralInstance from_ranks(const FeatureSpace& space, const std::vector<int>& ranks) {
  std::vector<int> coords(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) coords[i] = space.values()[static_cast<std::size_t>(ranks[i])];
  return GeneralInstance(std::move(coords));
}

double space_size_pow(const GeneralModel& f) {
  double n = 1;
  for (int i = 0; i < f.dimension(); ++i) n *= f.space().size();
  return n;
}

}  // namespace

GeneralReport brute_force_optimal_general(GeneralOracle& f, const GeneralInstance& x_star) {
  if (space_size_pow(f.model()) > static_cast<double>(1u << 20))
    throw CapabilityError("brute_force_optimal_general: |X|^d exceeds the 2^20 enumeration cap");
  const Bit base = f.eval(x_star);
  const int d = f.dimension();

  int best = d + 1;
  std::vector<std::vector<int>> diff_sets;
  std::vector<GeneralInstance> reps;
  std::vector<int> ranks(static_cast<std::size_t>(d), 0);
  do {
    const GeneralInstance y = from_ranks(f.space(), ranks);
    if (f.eval(y) == base) continue;
    std::vector<int> diff;
    for (int i = 0; i < d; ++i)
      if (y[i] != x_star[i]) diff.push_back(i);
    const int dist = static_cast<int>(diff.size());
    if (dist < best) {
      best = dist;
      diff_sets.clear();
      reps.clear();
    }
    if (dist == best && std::find(diff_sets.begin(), diff_sets.end(), diff) == diff_sets.end()) {
      diff_sets.push_back(std::move(diff));
      reps.push_back(y);
    }
  } while (next_point(ranks, f.space().size()));

  if (best > d) throw NoCounterfactualError("brute_force_optimal_general: model is constant");

  std::vector<std::size_t> order(diff_sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return diff_sets[a] < diff_sets[b]; });
  GeneralReport report;
  report.distance = best;
  report.queries = f.ledger().count;
  for (std::size_t i : order) {
    report.diff_sets.push_back(std::move(diff_sets[i]));
    report.representatives.push_back(std::move(reps[i]));
  }
  return report;
}

int general_sensitivity_at(const GeneralModel& f, const GeneralInstance& x) {
  if (f.space().size() * f.dimension() > 10000)
    throw CapabilityError("general_sensitivity_at: |X| * d exceeds the per-point cap of 10,000");
  const Bit base = f.value(x);
  int sensitive = 0;
  for (int i = 0; i < f.dimension(); ++i) {
    for (int a : f.space().values()) {
      if (a == x[i]) continue;
      if (f.value(x.with(i, a)) != base) {
        ++sensitive;
        break;
      }
    }
  }
  return sensitive;
}

int general_sensitivity(const GeneralModel& f) {
  if (space_size_pow(f) > static_cast<double>(1u << 20))
    throw CapabilityError("general_sensitivity: |X|^d exceeds the 2^20 enumeration cap");
  int best = 0;
  std::vector<int> ranks(static_cast<std::size_t>(f.dimension()), 0);
  do {
    best = std::max(best, general_sensitivity_at(f, from_ranks(f.space(), ranks)));
  } while (next_point(ranks, f.space().size()));
  return best;
}

bool check_general_monotone(const GeneralModel& f) {
  if (space_size_pow(f) > 60000) throw CapabilityError("check_general_monotone: |X|^d exceeds the cap of 60,000");
  // Covering pairs suffice: raise one coordinate by one rank at a time.
  std::vector<int> ranks(static_cast<std::size_t>(f.dimension()), 0);
  do {
    const GeneralInstance x = from_ranks(f.space(), ranks);
    const Bit fx = f.value(x);
    for (int i = 0; i < f.dimension(); ++i) {
      if (ranks[static_cast<std::size_t>(i)] + 1 >= f.space().size()) continue;
      const GeneralInstance y = x.with(i, f.space().values()[static_cast<std::size_t>(ranks[static_cast<std::size_t>(i)]) + 1]);
      if (fx > f.value(y)) return false;
    }
  } while (next_point(ranks, f.space().size()));
  return true;
}

namespace {

class GeneralThresholdModel : public GeneralModel {
public:
  GeneralThresholdModel(int d, FeatureSpace space, long long threshold)
      : d_(d), space_(std::move(space)), threshold_(threshold) {
    if (d_ < 1) throw UsageError("general-threshold: dimension must be >= 1");
  }

  int dimension() const override { return d_; }
  const FeatureSpace& space() const override { return space_; }

  Bit value(const GeneralInstance& x) const override {
    long long sum = 0;
    for (int i = 0; i < d_; ++i) sum += x[i];
    return sum >= threshold_ ? 1 : 0;
  }

  std::string name() const override { return "general-threshold(d=" + std::to_string(d_) + ")"; }

private:
  int d_;
  FeatureSpace space_;
  long long threshold_;
};

class GeneralDnfModel : public GeneralModel {
public:
  struct Literal {
    int feature;  // 0-based
    int min_value;
  };

  GeneralDnfModel(int d, FeatureSpace space, std::vector<std::vector<Literal>> terms)
      : d_(d), space_(std::move(space)), terms_(std::move(terms)) {
    if (d_ < 1) throw UsageError("general-dnf: dimension must be >= 1");
    if (terms_.empty()) throw UsageError("general-dnf: needs at least one term");
    for (const auto& term : terms_) {
      if (term.empty()) throw UsageError("general-dnf: empty term would make the model constant 1");
      for (const auto& lit : term) {
        if (lit.feature < 0 || lit.feature >= d_) throw UsageError("general-dnf: variable index out of range");
        if (lit.min_value <= space_.bottom() || lit.min_value > space_.top())
          throw UsageError("general-dnf: literal threshold must lie in (bottom, top]");
      }
    }
  }

  int dimension() const override { return d_; }
  const FeatureSpace& space() const override { return space_; }

  Bit value(const GeneralInstance& x) const override {
    for (const auto& term : terms_) {
      bool all = true;
      for (const auto& lit : term)
        if (x[lit.feature] < lit.min_value) {
          all = false;
          break;
        }
      if (all) return 1;
    }
    return 0;
  }

  std::string name() const override { return "general-dnf(d=" + std::to_string(d_) + ")"; }

private:
  int d_;
  FeatureSpace space_;
  std::vector<std::vector<Literal>> terms_;
};

}  // namespace

GeneralModelPtr general_model_from_json(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("kind"))
    throw UsageError("general model spec: expected an object with a \"kind\" field");
  const std::string kind = spec.at("kind").get<std::string>();
  if (!spec.contains("space")) throw UsageError("general model spec: missing \"space\"");
  FeatureSpace space(spec.at("space").get<std::vector<int>>());
  const int d = spec.at("d").get<int>();

  if (kind == "general-threshold")
    return std::make_shared<GeneralThresholdModel>(d, std::move(space), spec.at("threshold").get<long long>());

  if (kind == "general-dnf") {
    std::vector<std::vector<GeneralDnfModel::Literal>> terms;
    for (const auto& t : spec.at("terms")) {
      std::vector<GeneralDnfModel::Literal> term;
      for (const auto& lit : t) {
        if (!lit.is_array() || lit.size() != 2) throw UsageError("general-dnf: literal must be [var, min-value]");
        term.push_back(GeneralDnfModel::Literal{lit[0].get<int>() - 1, lit[1].get<int>()});
      }
      terms.push_back(std::move(term));
    }
    return std::make_shared<GeneralDnfModel>(d, std::move(space), std::move(terms));
  }

  throw UsageError("general model spec: unknown kind \"" + kind + "\"");
}

GeneralModelPtr general_model_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open model file: " + path);
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
  return general_model_from_json(spec);
}

}  // namespace monocf
