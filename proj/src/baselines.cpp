#include "monocf/baselines.hpp"

#include <algorithm>

#include "monocf/errors.hpp"

namespace monocf {

namespace {

// Visits the size-k subsets of [0, d) in lexicographic order.
class SubsetWalker {
public:
  SubsetWalker(int d, int k) : d_(d), idx_(static_cast<std::size_t>(k)) {
    for (int i = 0; i < k; ++i) idx_[static_cast<std::size_t>(i)] = i;
    done_ = k > d;
  }

  bool done() const { return done_; }
  const std::vector<int>& current() const { return idx_; }

  void advance() {
    const int k = static_cast<int>(idx_.size());
    int i = k - 1;
    while (i >= 0 && idx_[static_cast<std::size_t>(i)] == d_ - k + i) --i;
    if (i < 0) {
      done_ = true;
      return;
    }
    ++idx_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
  }

private:
  int d_;
  std::vector<int> idx_;
  bool done_ = false;
};

Instance flip_set(const Instance& x, const std::vector<int>& idx) {
  Instance y = x;
  for (int i : idx) y = y.flipped(i);
  return y;
}

}  // namespace

CounterfactualReport ball_search(MonotoneOracle& f, const Instance& x_star) {
  const int d = f.dimension();
  const Bit base = f.eval(x_star);
  for (int k = 1; k <= d; ++k) {
    std::vector<Instance> found;
    for (SubsetWalker w(d, k); !w.done(); w.advance()) {
      Instance y = flip_set(x_star, w.current());
      if (f.eval(y) != base) found.push_back(std::move(y));
    }
    if (!found.empty()) {
      std::sort(found.begin(), found.end());
      return CounterfactualReport{std::move(found), k, f.ledger().count};
    }
  }
  throw NoCounterfactualError("ball_search: model is constant; no counterfactual exists");
}

CounterfactualReport brute_force_optimal(MonotoneOracle& f, const Instance& x_star) {
  // Kept deliberately independent of ball_search and of the counterfactual /
  // idt modules: distance shells come from bucketing raw masks by popcount,
  // not from the subset walker above.
  const int d = f.dimension();
  if (d > 20) throw CapabilityError("brute_force_optimal: 2^d exceeds the 2^20 enumeration cap");
  const std::uint32_t star = x_star.to_mask();
  std::vector<std::vector<std::uint32_t>> shells(static_cast<std::size_t>(d) + 1);
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask)
    shells[static_cast<std::size_t>(__builtin_popcount(mask ^ star))].push_back(mask);

  const Bit base = f.eval(x_star);
  for (int k = 1; k <= d; ++k) {
    std::vector<Instance> found;
    for (std::uint32_t mask : shells[static_cast<std::size_t>(k)]) {
      Instance y = Instance::from_mask(mask, d);
      if (f.eval(y) != base) found.push_back(std::move(y));
    }
    if (!found.empty()) {
      std::sort(found.begin(), found.end());
      return CounterfactualReport{std::move(found), k, f.ledger().count};
    }
  }
  throw NoCounterfactualError("brute_force_optimal: model is constant; no counterfactual exists");
}

bool validate_local_trace(std::span<const Instance> trace, const Instance& x_star) {
  if (trace.empty() || trace[0] != x_star) return false;
  for (std::size_t t = 1; t < trace.size(); ++t) {
    bool adjacent = false;
    for (std::size_t s = 0; s < t && !adjacent; ++s)
      adjacent = delta(trace[s], trace[t]).size() == 1;
    if (!adjacent) return false;
  }
  return true;
}

}  // namespace monocf
