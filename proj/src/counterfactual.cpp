#include "monocf/counterfactual.hpp"

#include <algorithm>
#include <cassert>

#include "monocf/errors.hpp"

namespace monocf {

namespace {

struct SearchContext {
  MonotoneOracle& f;
  const Instance& x_star;
  Bit f_x_star;  // queried once per find_optimal and threaded through
  FindStats* stats;
};

void bump(std::uint64_t* counter) { ++*counter; }

// The recursion returns every counterfactual that is minimal within its own
// branch, which can include elements whose inclusion witness sits in a
// sibling branch. It does return every counterfactual that is minimal among
// the whole search space, so discarding candidates whose difference set
// strictly contains another candidate's leaves exactly the minimal ones.
// Query-free.
std::vector<Instance> keep_minimal(std::vector<Instance> candidates, const Instance& x_star) {
  std::vector<std::vector<int>> diffs;
  diffs.reserve(candidates.size());
  for (const Instance& c : candidates) diffs.push_back(delta(x_star, c));
  std::vector<Instance> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < candidates.size() && minimal; ++j) {
      if (j == i) continue;
      if (diffs[j].size() < diffs[i].size() &&
          std::includes(diffs[i].begin(), diffs[i].end(), diffs[j].begin(), diffs[j].end()))
        minimal = false;
    }
    if (minimal) kept.push_back(std::move(candidates[i]));
  }
  return kept;
}

std::vector<Instance> find_minimal_rec(SearchContext& ctx, const Restriction& rho, int k, const AuxInfo& aux) {
  if (ctx.stats) bump(&ctx.stats->calls);

  const Instance hybrid = overwrite(ctx.x_star, rho);
  if (ctx.stats) bump(&ctx.stats->direct_queries);
  if (ctx.f.eval(hybrid) != ctx.f_x_star) return {hybrid};

  if (ctx.stats) bump(&ctx.stats->idt_ops);
  const LeafProbe probe = leaf_probe(ctx.f, rho);
  if (probe.leaf() || k == 0) return {};

  if (ctx.stats) bump(&ctx.stats->idt_ops);
  const IdtQueryResult q = idt_query(ctx.f, rho, aux);
  const int i = q.feature;

  std::vector<Instance> agree = find_minimal_rec(ctx, rho.with(i, ctx.x_star[i]), k, q.aux);
  std::vector<Instance> differ = find_minimal_rec(ctx, rho.with(i, static_cast<Bit>(1 - ctx.x_star[i])), k - 1, q.aux);

#ifndef NDEBUG
  // The two branches partition the search space, so the union is disjoint.
  for (const Instance& a : agree)
    for (const Instance& b : differ) assert(a != b && "find_minimal branches overlapped");
#endif

  agree.insert(agree.end(), std::make_move_iterator(differ.begin()), std::make_move_iterator(differ.end()));
  return agree;
}

}  // namespace

std::vector<Instance> find_minimal(MonotoneOracle& f, const Restriction& rho, const Instance& x_star, int k,
                                   const AuxInfo& aux, FindStats* stats) {
  if (x_star.dimension() != f.dimension()) throw UsageError("find_minimal: instance dimension mismatch");
  if (rho.dimension() != f.dimension()) throw UsageError("find_minimal: restriction dimension mismatch");
  if (k < 0) throw UsageError("find_minimal: the distance budget must be >= 0");
  SearchContext ctx{f, x_star, 0, stats};
  if (stats) bump(&stats->direct_queries);
  ctx.f_x_star = f.eval(x_star);
  return keep_minimal(find_minimal_rec(ctx, rho, k, aux), x_star);
}

CounterfactualReport find_optimal(MonotoneOracle& f, const Instance& x_star, FindStats* stats) {
  if (x_star.dimension() != f.dimension()) throw UsageError("find_optimal: instance dimension mismatch");
  const int d = f.dimension();

  const Bit at_bottom = f.eval(Instance::zeros(d));
  const Bit at_top = f.eval(Instance::ones(d));
  if (at_bottom == at_top) throw NoCounterfactualError("find_optimal: model is constant; no counterfactual exists");

  SearchContext ctx{f, x_star, 0, stats};
  if (stats) bump(&stats->direct_queries);
  ctx.f_x_star = f.eval(x_star);

  const Restriction root = Restriction::empty(d);
  for (int k = 1; k <= d; ++k) {
    // At the first nonempty budget every candidate sits at distance exactly
    // k, so keep_minimal cannot drop anything here.
    std::vector<Instance> optima = keep_minimal(find_minimal_rec(ctx, root, k, AuxInfo{}), x_star);
    if (optima.empty()) continue;
    std::sort(optima.begin(), optima.end());
#ifndef NDEBUG
    for (const Instance& x : optima)
      assert(static_cast<int>(delta(x_star, x).size()) == k && "an optimum does not sit at the discovered distance");
#endif
    return CounterfactualReport{std::move(optima), k, f.ledger().count};
  }
  throw InvariantViolation(
      "find_optimal: no counterfactual within distance d of a non-constant model; "
      "the oracle is impure or not monotone");
}

InstanceSet InstanceSet::cube() { return InstanceSet(); }

InstanceSet InstanceSet::around(const Restriction& rho, const Instance& x_star, int k) {
  InstanceSet s;
  s.rho_ = rho;
  s.anchor_ = overwrite(x_star, rho);
  s.k_ = k;
  return s;
}

InstanceSet InstanceSet::explicit_set(std::vector<Instance> members) {
  InstanceSet s;
  s.members_ = std::move(members);
  return s;
}

bool InstanceSet::contains(const Instance& x) const {
  if (members_) return std::find(members_->begin(), members_->end(), x) != members_->end();
  if (rho_) return rho_->consistent(x) && static_cast<int>(delta(*anchor_, x).size()) <= k_;
  return true;  // the whole cube
}

bool is_minimal_counterfactual(MonotoneOracle& f, const Instance& x_star, const Instance& x_prime,
                               const InstanceSet& within) {
  if (x_star.dimension() != x_prime.dimension()) throw UsageError("is_minimal_counterfactual: length mismatch");
  const Bit base = f.eval(x_star);
  if (f.eval(x_prime) == base) return false;

  const std::vector<int> changed = delta(x_star, x_prime);
  const int v = static_cast<int>(changed.size());
  if (v > 20) throw CapabilityError("is_minimal_counterfactual: |Delta| exceeds the subset-enumeration cap of 20");

  // Strict subsets U of the changed set; x'' = x* flipped on U is the unique
  // instance differing from x* exactly on U.
  for (std::uint32_t sub = 0; sub + 1 < (1u << v); ++sub) {
    Instance candidate = x_star;
    for (int j = 0; j < v; ++j)
      if ((sub >> j) & 1u) candidate = candidate.flipped(changed[static_cast<std::size_t>(j)]);
    if (within.contains(candidate) && f.eval(candidate) != base) return false;
  }
  return true;
}

}  // namespace monocf
