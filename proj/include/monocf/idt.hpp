#pragma once

#include <json.hpp>

#include <vector>

#include "monocf/certificates.hpp"
#include "monocf/instance.hpp"
#include "monocf/oracle.hpp"

namespace monocf {

/// The auxiliary information threaded between IDT operations: the current
/// certificate block in ascending feature order. A feature of the block
/// counts as consumed exactly when it lies in Dom(rho).
struct AuxInfo {
  std::vector<int> block;
};

/// Both endpoint values of f_rho, from which leaf-ness and the leaf value
/// follow. Costs exactly 2 oracle queries.
struct LeafProbe {
  Bit lo;
  Bit hi;
  bool leaf() const { return lo == hi; }
  Bit value() const { return lo; }
};

LeafProbe leaf_probe(MonotoneOracle& f, const Restriction& rho);

/// IsLeaf: true iff f_rho is constant, decided by querying the all-zeros and
/// all-ones completions of rho (2 queries). The auxiliary information is not
/// needed by this implementation; the parameter mirrors the operation's
/// interface.
bool is_leaf(MonotoneOracle& f, const Restriction& rho, const AuxInfo& aux = AuxInfo{});

struct IdtQueryResult {
  int feature;
  AuxInfo aux;
  bool refilled;  // true when a fresh certificate block was drawn
};

/// Query: the feature tested at the (non-leaf) node rho, plus updated
/// auxiliary information. While the block has unconsumed features the
/// smallest one is returned at zero oracle cost; once the block is exhausted
/// a fresh certificate of f_rho is drawn (at most 2*S(f)*ceil(log2 d) + 2
/// queries). Expects is_leaf(f, rho, aux) to be false; a refill that comes
/// back empty means f_rho was constant after all and raises
/// InvariantViolation.
IdtQueryResult idt_query(MonotoneOracle& f, const Restriction& rho, const AuxInfo& aux);

struct WalkResult {
  Restriction leaf;
  Bit value;
  int depth;
};

/// Follows x's root-to-leaf path through the implicit tree. `s_bound` must be
/// an upper bound on S(f); paths longer than 2*s_bound^2 + s_bound raise
/// InvariantViolation.
WalkResult walk(MonotoneOracle& f, const Instance& x, int s_bound);

/// A fully expanded decision tree, for desk-scale verification of the lazy
/// operations. Internal nodes remember whether their feature started a fresh
/// certificate block.
class ExplicitTree {
public:
  struct Node {
    int feature = -1;  // -1 marks a leaf
    Bit leaf_value = 0;
    bool block_start = false;
    int lo = -1;
    int hi = -1;
  };

  ExplicitTree(int d, std::vector<Node> nodes, int root) : d_(d), nodes_(std::move(nodes)), root_(root) {}

  int dimension() const { return d_; }
  Bit eval(const Instance& x) const;
  int depth() const;
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int leaf_count() const;
  /// Largest number of certificate blocks intersecting any root-to-leaf path.
  int max_blocks_on_path() const;
  const Node& root() const { return nodes_[static_cast<std::size_t>(root_)]; }
  const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  int root_index() const { return root_; }

  /// Nested {"var": 1-based, "block_start": ..., "lo": ..., "hi": ...} /
  /// {"leaf": 0|1} document, the same shape the decision-tree ModelSpec uses.
  nlohmann::json to_json() const;

private:
  int d_;
  std::vector<Node> nodes_;
  int root_;
};

/// Expands the implicit tree exhaustively (both branches of every query).
/// Requires d <= 16; a path exceeding depth_cap raises InvariantViolation.
ExplicitTree materialize(MonotoneOracle& f, int depth_cap);

}  // namespace monocf
