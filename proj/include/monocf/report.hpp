#pragma once

#include <cstdint>
#include <vector>

#include "monocf/instance.hpp"

namespace monocf {

/// The answer to "find all optimal counterfactuals": the optima themselves
/// (sorted lexicographically), their common distance Delta_f(x*), and the
/// total oracle queries the producing run spent.
struct CounterfactualReport {
  std::vector<Instance> optima;
  int distance = 0;
  std::uint64_t ledger_snapshot = 0;

  /// One difference set per optimum, aligned with `optima` (0-based indices).
  /// Over the Boolean cube optima and difference sets are in bijection.
  std::vector<std::vector<int>> diff_sets(const Instance& x_star) const {
    std::vector<std::vector<int>> out;
    out.reserve(optima.size());
    for (const auto& x : optima) out.push_back(delta(x_star, x));
    return out;
  }
};

}  // namespace monocf
