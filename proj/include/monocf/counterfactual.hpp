#pragma once

#include <optional>

#include "monocf/idt.hpp"
#include "monocf/report.hpp"

namespace monocf {

/// Instrumentation for the recursion-accounting properties: IDT operations
/// and direct f-queries are counted separately, matching the two quantities
/// the h^O(k) bound covers.
struct FindStats {
  std::uint64_t calls = 0;           // find_minimal invocations
  std::uint64_t idt_ops = 0;         // is_leaf + query operations
  std::uint64_t direct_queries = 0;  // f(x*) and f(x*_rho) evaluations
};

/// All minimal counterfactuals for x* among the instances consistent with rho
/// within distance k of overwrite(x*, rho).
///
/// Recursive descent of the implicit tree: if overwriting x* with rho already
/// flips f, that single hybrid is the answer; at a leaf or with the budget
/// exhausted there is none; otherwise the node's feature splits the search
/// space into the x*-agreeing branch (budget k) and the disagreeing branch
/// (budget k-1), and the two answers are disjoint by construction (asserted
/// in debug builds rather than deduplicated). The raw union contains every
/// minimal counterfactual plus possibly branch-minimal extras whose witnesses
/// live in sibling branches; a query-free self-filter removes those, so the
/// result is exactly the minimal set.
///
/// `rho` must name a legal tree path and `aux` must be the auxiliary
/// information produced along it (empty at the root).
std::vector<Instance> find_minimal(MonotoneOracle& f, const Restriction& rho, const Instance& x_star, int k,
                                   const AuxInfo& aux, FindStats* stats = nullptr);

/// All optimal counterfactuals for x*, found by running find_minimal from the
/// root with budgets k = 1, 2, ... until a call returns a nonempty set; that
/// k is Delta_f(x*). Queries f(x*) once and threads the bit through the whole
/// recursion. Throws NoCounterfactualError when f is constant (detected with
/// 2 queries) and InvariantViolation if k somehow exceeds d.
CounterfactualReport find_optimal(MonotoneOracle& f, const Instance& x_star, FindStats* stats = nullptr);

/// The instance set I that minimality is judged against.
class InstanceSet {
public:
  static InstanceSet cube();
  /// Instances consistent with rho within distance k of overwrite(x*, rho).
  static InstanceSet around(const Restriction& rho, const Instance& x_star, int k);
  static InstanceSet explicit_set(std::vector<Instance> members);

  bool contains(const Instance& x) const;

private:
  InstanceSet() = default;
  std::optional<Restriction> rho_;
  std::optional<Instance> anchor_;  // overwrite(x*, rho)
  int k_ = 0;
  std::optional<std::vector<Instance>> members_;
};

/// Definition check: x' (a member of I) is a minimal counterfactual for x*
/// among I iff f(x') != f(x*) and no instance of I differing from x* on a
/// strict subset of Delta(x*, x') also flips f. Enumerates the at most
/// 2^|Delta| subset instances; |Delta| > 20 raises CapabilityError.
bool is_minimal_counterfactual(MonotoneOracle& f, const Instance& x_star, const Instance& x_prime,
                               const InstanceSet& within);

}  // namespace monocf
