#include "monocf/idt.hpp"

#include "monocf/errors.hpp"

namespace monocf {

LeafProbe leaf_probe(MonotoneOracle& f, const Restriction& rho) {
  const int d = f.dimension();
  return LeafProbe{f.eval(overwrite(Instance::zeros(d), rho)), f.eval(overwrite(Instance::ones(d), rho))};
}

bool is_leaf(MonotoneOracle& f, const Restriction& rho, const AuxInfo&) { return leaf_probe(f, rho).leaf(); }

IdtQueryResult idt_query(MonotoneOracle& f, const Restriction& rho, const AuxInfo& aux) {
  for (int i : aux.block)
    if (!rho.fixed(i)) return IdtQueryResult{i, aux, false};
  Certificate cert = find_certificate(f, rho);
  if (cert.empty())
    throw InvariantViolation("idt_query: certificate refill on a non-leaf came back empty (f_rho is constant)");
  const int first = cert.features.front();
  return IdtQueryResult{first, AuxInfo{std::move(cert.features)}, true};
}

WalkResult walk(MonotoneOracle& f, const Instance& x, int s_bound) {
  if (x.dimension() != f.dimension()) throw UsageError("walk: instance dimension mismatch");
  const int cap = 2 * s_bound * s_bound + s_bound;
  Restriction rho = Restriction::empty(f.dimension());
  AuxInfo aux;
  int depth = 0;
  LeafProbe probe = leaf_probe(f, rho);
  while (!probe.leaf()) {
    if (depth >= cap)
      throw InvariantViolation("walk: path exceeded the depth cap 2*S^2 + S = " + std::to_string(cap) +
                               "; is the supplied sensitivity bound correct?");
    IdtQueryResult q = idt_query(f, rho, aux);
    rho = rho.with(q.feature, x[q.feature]);
    aux = std::move(q.aux);
    ++depth;
    probe = leaf_probe(f, rho);
  }
  return WalkResult{std::move(rho), probe.value(), depth};
}

Bit ExplicitTree::eval(const Instance& x) const {
  int at = root_;
  while (nodes_[static_cast<std::size_t>(at)].feature >= 0) {
    const Node& n = nodes_[static_cast<std::size_t>(at)];
    at = x[n.feature] ? n.hi : n.lo;
  }
  return nodes_[static_cast<std::size_t>(at)].leaf_value;
}

int ExplicitTree::depth() const {
  // Children have smaller indices than parents (post-order construction), so
  // a reverse scan sees parents first.
  int best = 0;
  std::vector<int> depth_from_root(nodes_.size(), 0);
  for (int i = static_cast<int>(nodes_.size()) - 1; i >= 0; --i) {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    if (n.feature < 0) {
      best = std::max(best, depth_from_root[static_cast<std::size_t>(i)]);
      continue;
    }
    depth_from_root[static_cast<std::size_t>(n.lo)] = depth_from_root[static_cast<std::size_t>(i)] + 1;
    depth_from_root[static_cast<std::size_t>(n.hi)] = depth_from_root[static_cast<std::size_t>(i)] + 1;
  }
  return best;
}

int ExplicitTree::leaf_count() const {
  int leaves = 0;
  for (const Node& n : nodes_) leaves += (n.feature < 0) ? 1 : 0;
  return leaves;
}

int ExplicitTree::max_blocks_on_path() const {
  std::vector<int> blocks_above(nodes_.size(), 0);
  int best = 0;
  for (int i = static_cast<int>(nodes_.size()) - 1; i >= 0; --i) {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    const int here = blocks_above[static_cast<std::size_t>(i)] + ((n.feature >= 0 && n.block_start) ? 1 : 0);
    if (n.feature < 0) {
      best = std::max(best, here);
      continue;
    }
    blocks_above[static_cast<std::size_t>(n.lo)] = here;
    blocks_above[static_cast<std::size_t>(n.hi)] = here;
  }
  return best;
}

nlohmann::json ExplicitTree::to_json() const {
  // Recursive lambda over node indices.
  std::function<nlohmann::json(int)> emit = [&](int at) -> nlohmann::json {
    const Node& n = nodes_[static_cast<std::size_t>(at)];
    if (n.feature < 0) return nlohmann::json{{"leaf", static_cast<int>(n.leaf_value)}};
    return nlohmann::json{
        {"var", n.feature + 1}, {"block_start", n.block_start}, {"lo", emit(n.lo)}, {"hi", emit(n.hi)}};
  };
  return emit(root_);
}

namespace {

int materialize_rec(MonotoneOracle& f, const Restriction& rho, const AuxInfo& aux, int depth, int depth_cap,
                    std::vector<ExplicitTree::Node>& nodes) {
  const LeafProbe probe = leaf_probe(f, rho);
  if (probe.leaf()) {
    ExplicitTree::Node leaf;
    leaf.leaf_value = probe.value();
    nodes.push_back(leaf);
    return static_cast<int>(nodes.size()) - 1;
  }
  if (depth >= depth_cap)
    throw InvariantViolation("materialize: tree exceeded the depth cap " + std::to_string(depth_cap));
  const IdtQueryResult q = idt_query(f, rho, aux);
  ExplicitTree::Node node;
  node.feature = q.feature;
  node.block_start = q.refilled;
  node.lo = materialize_rec(f, rho.with(q.feature, 0), q.aux, depth + 1, depth_cap, nodes);
  node.hi = materialize_rec(f, rho.with(q.feature, 1), q.aux, depth + 1, depth_cap, nodes);
  nodes.push_back(node);
  return static_cast<int>(nodes.size()) - 1;
}

}  // namespace

ExplicitTree materialize(MonotoneOracle& f, int depth_cap) {
  if (f.dimension() > 16) throw CapabilityError("materialize: d exceeds the expansion cap of 16");
  std::vector<ExplicitTree::Node> nodes;
  const int root = materialize_rec(f, Restriction::empty(f.dimension()), AuxInfo{}, 0, depth_cap, nodes);
  return ExplicitTree(f.dimension(), std::move(nodes), root);
}

}  // namespace monocf
