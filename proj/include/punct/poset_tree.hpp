#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace punct {

/// First violated clause of a structure definition, with witnessing nodes.
struct Violation {
  std::string clause;
  std::vector<uint64_t> witnesses;
};

template <class T>
using Checked = std::variant<T, Violation>;

constexpr size_t kDefaultNodeBudget = 100000;

/// A finite partial order with greatest-element root whose up-sets are finite
/// chains.  Equivalently a rooted tree ordered by the ancestor relation; the
/// parent of x is the least element strictly above x.
struct FinitePosetTree {
  std::vector<uint32_t> ids;      // sorted node ids
  std::vector<int32_t> parent;    // index into ids, -1 for the root
  uint32_t root = 0;

  size_t size() const { return ids.size(); }

  int32_t indexOf(uint32_t id) const;  // -1 if absent
  bool contains(uint32_t id) const { return indexOf(id) >= 0; }

  /// x <= y in the tree order: y lies on the chain from x to the root.
  bool leq(uint32_t x, uint32_t y) const;

  /// The chain {z : z >= x}, from x up to the root.
  std::vector<uint32_t> upSet(uint32_t x) const;

  std::vector<std::vector<uint32_t>> childrenByIndex() const;

  /// Builds a tree from parent edges (child, parent).  Throws on malformed
  /// input; use validatePosetTree for raw-relation checking.
  static FinitePosetTree fromParentEdges(uint32_t root,
                                         std::span<const std::pair<uint32_t, uint32_t>> edges);

  friend bool operator==(const FinitePosetTree&, const FinitePosetTree&) = default;
};

/// Checks the poset-tree clauses on a raw relation given as a predicate over
/// an explicit node list.  Returns the typed tree or the first violation.
Checked<FinitePosetTree> validatePosetTree(
    std::span<const uint32_t> nodes,
    const std::function<bool(uint32_t, uint32_t)>& leqRaw,
    size_t nodeBudget = kDefaultNodeBudget);

struct BranchingEntry {
  uint32_t node = 0;
  uint32_t level = 0;   // branching nodes strictly above
  uint32_t length = 0;  // card of the up-set of node
};

struct BranchingReport {
  std::vector<BranchingEntry> entries;  // ascending by node id
  bool uniquelyBranching = true;
};

BranchingReport branchingReport(const FinitePosetTree& tree);

/// T_[<=i], the least subtree containing all branchings at levels <= i with
/// their children; nullopt when level i is empty.
std::optional<FinitePosetTree> levelSubtree(const FinitePosetTree& tree, uint32_t i);

/// Attaches the addend to a leaf of the host: the addend's root is identified
/// with the leaf.  Throws std::invalid_argument on a non-leaf target or id
/// collision.
FinitePosetTree attach(const FinitePosetTree& host, uint32_t leaf,
                       const FinitePosetTree& addend);

/// Least-id leaf whose up-set avoids the blocked set.  The precondition (at
/// most one blocked node per level except the first, root unblocked) is
/// checked on the collapse of the tree to proper binary form.
Checked<uint32_t> findOpenLeaf(const FinitePosetTree& tree, const std::set<uint32_t>& blocked);

}  // namespace punct
