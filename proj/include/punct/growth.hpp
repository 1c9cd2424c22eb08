#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace punct {

/// Append-only tree over ids 0..n-1 with the expansionary growth rule: at each
/// expansion every open leaf receives a binary branching whose branching node
/// has up-set cardinality H + j - 1, H = 1 + the largest branching length so
/// far.  Shared by the diagonalizer and the honest-mirror adversaries.
struct GrowTree {
  std::vector<int32_t> parent;      // -1 for the root
  std::vector<uint32_t> upCard;     // |T_{>=x}|, root = 1
  std::vector<uint32_t> childCount;
  std::set<uint32_t> branchLengths;  // lengths of branching nodes, all distinct
  uint64_t nodeBudget = 0;           // 0 = unlimited

  struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("node budget exceeded") {}
  };

  struct Attachment {
    uint32_t leaf = 0;
    uint32_t branchNode = 0;
    uint32_t firstFresh = 0, freshCount = 0;  // fresh ids form an interval
    uint32_t length = 0;                      // up-set cardinality of branchNode
  };

  GrowTree() {
    parent.push_back(-1);
    upCard.push_back(1);
    childCount.push_back(0);
  }

  size_t size() const { return parent.size(); }
  bool isLeaf(uint32_t x) const { return childCount[x] == 0; }

  uint32_t growthTarget() const {
    return branchLengths.empty() ? 1 : *branchLengths.rbegin() + 1;  // H
  }

  uint32_t addChild(uint32_t p) {
    if (nodeBudget && size() >= nodeBudget) throw BudgetExceeded{};
    parent.push_back(static_cast<int32_t>(p));
    upCard.push_back(upCard[p] + 1);
    childCount.push_back(0);
    ++childCount[p];
    return static_cast<uint32_t>(size() - 1);
  }

  /// Attaches one binary branching at `leaf`, with target branching length
  /// `target`; the connecting chain has target - upCard[leaf] - 1 nodes, and
  /// target == upCard[leaf] branches at the leaf itself.
  Attachment attachBranching(uint32_t leaf, uint32_t target) {
    if (!isLeaf(leaf)) throw std::invalid_argument("attachBranching: not a leaf");
    if (target < upCard[leaf])
      throw std::invalid_argument("attachBranching: target below leaf chain");
    if (!branchLengths.insert(target).second)
      throw std::invalid_argument("attachBranching: duplicate branching length");
    Attachment a;
    a.leaf = leaf;
    a.firstFresh = static_cast<uint32_t>(size());
    a.length = target;
    uint32_t x = leaf;
    for (uint32_t need = target - upCard[leaf]; need > 0; --need) x = addChild(x);
    a.branchNode = x;
    addChild(x);
    addChild(x);
    a.freshCount = static_cast<uint32_t>(size()) - a.firstFresh;
    return a;
  }

  /// One expansionary step over the given open leaves (ascending ids).
  std::vector<Attachment> expand(const std::vector<uint32_t>& openLeaves) {
    std::vector<Attachment> out;
    uint32_t h = growthTarget();
    for (size_t j = 0; j < openLeaves.size(); ++j)
      out.push_back(attachBranching(openLeaves[j], h + static_cast<uint32_t>(j)));
    return out;
  }

  std::vector<uint32_t> leaves() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < size(); ++i)
      if (childCount[i] == 0) out.push_back(i);
    return out;
  }
};

/// Euler-tour intervals for O(1) ancestor tests on a GrowTree snapshot.
struct AncestorIndex {
  std::vector<uint32_t> tin, tout;

  void build(const GrowTree& t) {
    const size_t n = t.size();
    std::vector<std::vector<uint32_t>> children(n);
    for (uint32_t i = 1; i < n; ++i) children[t.parent[i]].push_back(i);
    tin.assign(n, 0);
    tout.assign(n, 0);
    uint32_t clock = 0;
    std::vector<std::pair<uint32_t, size_t>> stack{{0, 0}};
    tin[0] = clock++;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < children[node].size()) {
        uint32_t c = children[node][next++];
        tin[c] = clock++;
        stack.emplace_back(c, 0);
      } else {
        tout[node] = clock++;
        stack.pop_back();
      }
    }
  }

  /// x <= y in the tree order (y is an ancestor of x or x itself).
  bool leqTree(uint32_t x, uint32_t y) const {
    return tin[y] <= tin[x] && tout[x] <= tout[y];
  }
};

}  // namespace punct
