#pragma once

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monocf/oracle.hpp"
#include "monocf/rng.hpp"

namespace monocf {

using json = nlohmann::json;

/// Monotone DNF: disjunction of conjunctions of positive literals.
/// Terms hold 0-based feature indices; every term must be nonempty, which
/// guarantees f(0^d) = 0 and f(1^d) = 1.
class DnfModel : public Model {
public:
  DnfModel(int d, std::vector<std::vector<int>> terms);
  int dimension() const override { return d_; }
  Bit value(const Instance& x) const override;
  std::string name() const override;
  const std::vector<std::vector<int>>& terms() const { return terms_; }

private:
  int d_;
  std::vector<std::vector<int>> terms_;
};

/// f(x) = x_i (0-based index).
class DictatorModel : public Model {
public:
  DictatorModel(int d, int i);
  int dimension() const override { return d_; }
  Bit value(const Instance& x) const override;
  std::string name() const override;
  int index() const { return i_; }

private:
  int d_;
  int i_;
};

/// Majority over an odd number of features.
class MajorityModel : public Model {
public:
  explicit MajorityModel(int d);
  int dimension() const override { return d_; }
  Bit value(const Instance& x) const override;
  std::string name() const override;

private:
  int d_;
};

/// The planted-threshold family: f(x) = 1 iff at least delta+1 of the first s
/// coordinates are 1, or the first s coordinates equal z exactly. z must have
/// length s and weight delta >= 1; from 0^d the unique optimal counterfactual
/// is z padded with zeros, at distance delta.
class PlantedThresholdModel : public Model {
public:
  PlantedThresholdModel(int d, int s, int delta, std::vector<Bit> z);
  int dimension() const override { return d_; }
  Bit value(const Instance& x) const override;
  std::string name() const override;
  int s() const { return s_; }
  int delta() const { return delta_; }
  const std::vector<Bit>& z() const { return z_; }
  Instance planted_optimum() const;

private:
  int d_;
  int s_;
  int delta_;
  std::vector<Bit> z_;
};

/// An explicit decision tree (not necessarily monotone; the loader validates).
class DecisionTreeModel : public Model {
public:
  struct Node {
    int feature = -1;  // -1 marks a leaf
    Bit leaf_value = 0;
    int lo = -1;
    int hi = -1;
  };

  DecisionTreeModel(int d, std::vector<Node> nodes, int root);
  int dimension() const override { return d_; }
  Bit value(const Instance& x) const override;
  std::string name() const override;

private:
  int d_;
  std::vector<Node> nodes_;
  int root_;
};

/// Outcome of a monotonicity check: nullopt when no violation was found,
/// otherwise a witnessing comparable pair x <= y with f(x) > f(y).
struct MonotonicityViolation {
  Instance low;
  Instance high;
};
std::optional<MonotonicityViolation> check_monotone_exhaustive(const Model& f);  // d <= 20
std::optional<MonotonicityViolation> check_monotone_sampled(const Model& f, int pairs, std::uint64_t seed);

enum class ValidationPolicy {
  kStrict,  // reject non-monotone models: exhaustively for d <= 16, by sampled pairs (warn only) above
  kTrust,   // skip validation (known-monotone constructions, test fixtures)
};

/// Loads a ModelSpec JSON document ({"kind": ..., ...}). Throws UsageError on
/// malformed documents or, under kStrict with d <= 16, on a monotonicity
/// violation. For larger d the sampled check (10,000 comparable pairs) writes
/// a warning to stderr but does not reject.
ModelPtr model_from_json(const json& spec, ValidationPolicy policy = ValidationPolicy::kStrict);
ModelPtr model_from_file(const std::string& path, ValidationPolicy policy = ValidationPolicy::kStrict);

/// Random monotone DNF: `num_terms` terms, each over `width` distinct
/// variables (width drawn from [1, max_width]). The fuzzing family of the
/// model zoo.
std::shared_ptr<const DnfModel> random_dnf(int d, int num_terms, int max_width, Rng& rng);

}  // namespace monocf
