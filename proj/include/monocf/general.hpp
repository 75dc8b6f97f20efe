#pragma once

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

#include "monocf/instance.hpp"
#include "monocf/oracle.hpp"

namespace monocf {

/// A finite totally ordered feature space. Values are integers listed in
/// strictly increasing order; the first is the bottom element and the last is
/// the top. Finiteness is a representation choice: only the top, the bottom
/// and the values actually queried ever matter to the algorithms.
class FeatureSpace {
public:
  explicit FeatureSpace(std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  int bottom() const { return values_.front(); }
  int top() const { return values_.back(); }
  const std::vector<int>& values() const { return values_; }
  bool contains(int v) const;

  bool operator==(const FeatureSpace&) const = default;

private:
  std::vector<int> values_;
};

/// A point of X^d, stored as raw values from the space.
class GeneralInstance {
public:
  GeneralInstance() = default;
  explicit GeneralInstance(std::vector<int> coords) : coords_(std::move(coords)) {}

  static GeneralInstance constant(int d, int v) { return GeneralInstance(std::vector<int>(static_cast<std::size_t>(d), v)); }
  /// Parses the CLI encoding "0,2,1".
  static GeneralInstance parse(const std::string& s);

  int dimension() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  GeneralInstance with(int i, int v) const;
  const std::vector<int>& coords() const { return coords_; }
  std::string str() const;

  auto operator<=>(const GeneralInstance&) const = default;

private:
  std::vector<int> coords_;
};

class GeneralModel {
public:
  virtual ~GeneralModel() = default;
  virtual int dimension() const = 0;
  virtual const FeatureSpace& space() const = 0;
  virtual Bit value(const GeneralInstance& x) const = 0;
  virtual std::string name() const = 0;
};

using GeneralModelPtr = std::shared_ptr<const GeneralModel>;

struct GeneralLedger {
  std::uint64_t count = 0;
  bool tracing = false;
  std::vector<GeneralInstance> trace;
};

/// Query-counted handle onto a shared general model; mirrors MonotoneOracle.
class GeneralOracle {
public:
  explicit GeneralOracle(GeneralModelPtr model, bool tracing = false);

  int dimension() const { return model_->dimension(); }
  const FeatureSpace& space() const { return model_->space(); }
  const GeneralModel& model() const { return *model_; }
  GeneralModelPtr model_ptr() const { return model_; }

  Bit eval(const GeneralInstance& x);

  GeneralLedger& ledger() { return ledger_; }
  const GeneralLedger& ledger() const { return ledger_; }

private:
  GeneralModelPtr model_;
  GeneralLedger ledger_;
};

/// x with the y-selected features snapped to the top of the space:
/// (x up y)_i = top when y_i = 1, x_i otherwise.
GeneralInstance snap_up(const FeatureSpace& space, const GeneralInstance& x, const Instance& y);

/// The dual: (x down y)_i = x_i when y_i = 1, bottom otherwise. Always
/// snap_down(x,y) <= x <= snap_up(x,y) coordinatewise.
GeneralInstance snap_down(const FeatureSpace& space, const GeneralInstance& x, const Instance& y);

/// The induced Boolean model f_x: f_x(y) = f(x snapped by y), snapping down
/// when f(x) = 1 and up when f(x) = 0. Monotone whenever f is; every f_x
/// evaluation costs exactly one f evaluation.
ModelPtr reduced_model(GeneralModelPtr f, const GeneralInstance& x, Bit f_of_x);

/// Builds the Boolean oracle for f_x. Spends one query on f(x) at
/// construction (on `f`'s ledger); the returned oracle's ledger then counts
/// f-queries one-for-one.
MonotoneOracle reduce(GeneralOracle& f, const GeneralInstance& x);

struct GeneralReport {
  std::vector<std::vector<int>> diff_sets;  // ascending 0-based index sets, sorted
  int distance = 0;
  std::uint64_t queries = 0;
  /// One canonical optimal counterfactual per diff set (the snapped
  /// representative x up/down y). Representative, not exhaustive: general
  /// spaces can have many optima per diff set.
  std::vector<GeneralInstance> representatives;
};

/// The collection C_f(x*) of difference sets of optimal counterfactuals,
/// computed by running the Boolean engine on f_{x*} at the input f(x*)^d.
GeneralReport find_optimal_general(GeneralOracle& f, const GeneralInstance& x_star);

/// Brute-force C_f(x*) by enumerating X^d; the independent oracle for the
/// reduction. Requires |X|^d <= 2^20.
GeneralReport brute_force_optimal_general(GeneralOracle& f, const GeneralInstance& x_star);

/// S_f(x) over a general space: features i for which some a in X flips f.
/// The per-point work is |X| * d, capped at 10,000.
int general_sensitivity_at(const GeneralModel& f, const GeneralInstance& x);

/// S(f) = max_x S_f(x), enumerating X^d (requires |X|^d <= 2^20).
int general_sensitivity(const GeneralModel& f);

/// Exhaustive monotonicity audit over the lifted coordinatewise order.
/// Requires |X|^d <= 60,000.
bool check_general_monotone(const GeneralModel& f);

/// General ModelSpec kinds: {"kind":"general-threshold","d":...,"space":[...],
/// "threshold":...} (1 iff the coordinate sum reaches the threshold) and
/// {"kind":"general-dnf","d":...,"space":[...],"terms":[[[var,min],...],...]}
/// (disjunction of conjunctions of per-feature lower bounds, 1-based vars).
GeneralModelPtr general_model_from_json(const nlohmann::json& spec);
GeneralModelPtr general_model_from_file(const std::string& path);

}  // namespace monocf
