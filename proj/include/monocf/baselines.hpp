#pragma once

#include <span>

#include "monocf/oracle.hpp"
#include "monocf/report.hpp"

namespace monocf {

/// Ball search: query x*, then every instance at Hamming distance 1, then 2,
/// and so on until the first distance with a counterfactual; returns all
/// counterfactuals found at that distance. Enumeration within a shell is
/// lexicographic by flipped-index set, so reports are deterministic.
/// Query count is exactly 1 + sum_{j<=k} C(d, j). Throws NoCounterfactualError
/// on constant models. (Over a general feature space one would probe only the
/// maximal flip per feature; on the Boolean cube a flip already is maximal,
/// so there is nothing to prune.)
CounterfactualReport ball_search(MonotoneOracle& f, const Instance& x_star);

/// Exhaustive enumeration by increasing distance. This is the designated
/// independent oracle for the rest of the repo: it shares no code with the
/// counterfactual or idt modules and must stay that way. Requires 2^d <= 2^20.
CounterfactualReport brute_force_optimal(MonotoneOracle& f, const Instance& x_star);

/// True iff the trace could have been produced by a local search algorithm:
/// trace[0] = x* and every later query is at Hamming distance exactly 1 from
/// some earlier query.
bool validate_local_trace(std::span<const Instance> trace, const Instance& x_star);

}  // namespace monocf
