#include "monocf/oracle.hpp"

#include "monocf/errors.hpp"

namespace monocf {

MonotoneOracle::MonotoneOracle(ModelPtr model, bool tracing, bool memoize) : model_(std::move(model)) {
  ledger_.tracing = tracing;
  if (memoize) memo_.emplace();
}

Bit MonotoneOracle::eval(const Instance& x) {
  if (x.dimension() != dimension())
    throw UsageError("eval: instance length " + std::to_string(x.dimension()) + " does not match oracle dimension " +
                     std::to_string(dimension()));
  ledger_.record(x);
  if (memo_) {
    auto it = memo_->find(x);
    if (it != memo_->end()) return it->second;
    const Bit v = model_->value(x);
    memo_->emplace(x, v);
    return v;
  }
  return model_->value(x);
}

std::uint64_t MonotoneOracle::distinct_queries() const {
  return memo_ ? static_cast<std::uint64_t>(memo_->size()) : ledger_.count;
}

std::vector<Bit> truth_table(const Model& f) {
  const int d = f.dimension();
  if (d > 20) throw CapabilityError("truth_table: d = " + std::to_string(d) + " exceeds the brute-force cap of 20");
  std::vector<Bit> table(std::size_t{1} << d);
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) table[mask] = f.value(Instance::from_mask(mask, d));
  return table;
}

}  // namespace monocf
