#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "monocf/instance.hpp"

namespace monocf {

/// Counts every oracle evaluation; optionally records the queried instances.
/// The ledger is the artifact's central performance metric, so algorithms are
/// written against MonotoneOracle and never against a raw Model.
struct QueryLedger {
  std::uint64_t count = 0;
  bool tracing = false;
  std::vector<Instance> trace;

  void record(const Instance& x) {
    ++count;
    if (tracing) trace.push_back(x);
  }
};

/// A pure evaluator over the Boolean cube. Implementations must be stateless
/// and safely shareable across concurrent searches.
class Model {
public:
  virtual ~Model() = default;
  virtual int dimension() const = 0;
  virtual Bit value(const Instance& x) const = 0;
  virtual std::string name() const = 0;
};

using ModelPtr = std::shared_ptr<const Model>;

/// Query-counted handle onto a shared Model. Each search run owns its own
/// oracle (hence its own ledger); the backing model is immutable and shared.
///
/// The optional memo layer saves recomputation when the same point is queried
/// twice but never changes the raw count: with memoization on, the ledger
/// still ticks per eval() and distinct_queries() reports the deduplicated
/// figure separately.
class MonotoneOracle {
public:
  explicit MonotoneOracle(ModelPtr model, bool tracing = false, bool memoize = false);

  int dimension() const { return model_->dimension(); }
  const Model& model() const { return *model_; }
  ModelPtr model_ptr() const { return model_; }

  /// f(x). Throws UsageError on dimension mismatch; increments the ledger by
  /// exactly 1.
  Bit eval(const Instance& x);

  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }

  bool memoizing() const { return memo_.has_value(); }
  std::uint64_t distinct_queries() const;

private:
  ModelPtr model_;
  QueryLedger ledger_;
  std::optional<std::unordered_map<Instance, Bit, InstanceHash>> memo_;
};

/// Truth table of a model, indexed by Instance::to_mask(). Brute-force tools
/// only; requires d <= 20.
std::vector<Bit> truth_table(const Model& f);

}  // namespace monocf
