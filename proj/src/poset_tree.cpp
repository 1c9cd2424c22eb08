#include "punct/poset_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace punct {

int32_t FinitePosetTree::indexOf(uint32_t id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return -1;
  return static_cast<int32_t>(it - ids.begin());
}

bool FinitePosetTree::leq(uint32_t x, uint32_t y) const {
  int32_t xi = indexOf(x), yi = indexOf(y);
  if (xi < 0 || yi < 0) throw std::out_of_range("leq: node absent");
  for (int32_t cur = xi; cur >= 0; cur = parent[cur])
    if (cur == yi) return true;
  return false;
}

std::vector<uint32_t> FinitePosetTree::upSet(uint32_t x) const {
  int32_t xi = indexOf(x);
  if (xi < 0) throw std::out_of_range("upSet: node absent");
  std::vector<uint32_t> out;
  for (int32_t cur = xi; cur >= 0; cur = parent[cur]) out.push_back(ids[cur]);
  return out;
}

std::vector<std::vector<uint32_t>> FinitePosetTree::childrenByIndex() const {
  std::vector<std::vector<uint32_t>> ch(ids.size());
  for (size_t i = 0; i < ids.size(); ++i)
    if (parent[i] >= 0) ch[parent[i]].push_back(static_cast<uint32_t>(i));
  return ch;
}

FinitePosetTree FinitePosetTree::fromParentEdges(
    uint32_t root, std::span<const std::pair<uint32_t, uint32_t>> edges) {
  FinitePosetTree t;
  t.ids.push_back(root);
  for (auto [c, p] : edges) {
    t.ids.push_back(c);
    t.ids.push_back(p);
  }
  std::sort(t.ids.begin(), t.ids.end());
  t.ids.erase(std::unique(t.ids.begin(), t.ids.end()), t.ids.end());
  t.root = root;
  t.parent.assign(t.ids.size(), -1);
  for (auto [c, p] : edges) {
    int32_t ci = t.indexOf(c);
    if (c == root || t.parent[ci] != -1)
      throw std::invalid_argument("fromParentEdges: duplicate parent or rooted child");
    t.parent[ci] = t.indexOf(p);
  }
  for (size_t i = 0; i < t.ids.size(); ++i)
    if (t.parent[i] == -1 && t.ids[i] != root)
      throw std::invalid_argument("fromParentEdges: disconnected node");
  for (size_t i = 0; i < t.ids.size(); ++i) {
    size_t steps = 0;
    for (int32_t cur = static_cast<int32_t>(i); cur >= 0; cur = t.parent[cur])
      if (++steps > t.ids.size()) throw std::invalid_argument("fromParentEdges: cycle");
  }
  return t;
}

namespace {

/// Depth, branching level and children lists in one BFS pass.
struct TreeScan {
  std::vector<std::vector<uint32_t>> children;  // dense indices
  std::vector<uint32_t> childCount;
  std::vector<uint32_t> depth;        // chain length to root, root = 0
  std::vector<uint32_t> branchLevel;  // branching nodes strictly above
  int32_t rootIdx = -1;

  explicit TreeScan(const FinitePosetTree& t) {
    const size_t n = t.size();
    children.assign(n, {});
    for (size_t i = 0; i < n; ++i) {
      if (t.parent[i] >= 0)
        children[t.parent[i]].push_back(static_cast<uint32_t>(i));
      else
        rootIdx = static_cast<int32_t>(i);
    }
    childCount.assign(n, 0);
    for (size_t i = 0; i < n; ++i) childCount[i] = static_cast<uint32_t>(children[i].size());
    depth.assign(n, 0);
    branchLevel.assign(n, 0);
    std::vector<uint32_t> queue{static_cast<uint32_t>(rootIdx)};
    for (size_t q = 0; q < queue.size(); ++q) {
      uint32_t cur = queue[q];
      for (uint32_t c : children[cur]) {
        depth[c] = depth[cur] + 1;
        branchLevel[c] = branchLevel[cur] + (childCount[cur] >= 2 ? 1 : 0);
        queue.push_back(c);
      }
    }
  }

  bool branching(uint32_t i) const { return childCount[i] >= 2; }
  bool leaf(uint32_t i) const { return childCount[i] == 0; }

  /// Skeleton representative for the collapse to proper binary form: follow
  /// single-child links down to the next branching node or leaf.
  uint32_t skeletonOf(uint32_t i) const {
    while (childCount[i] == 1) i = children[i][0];
    return i;
  }
};

}  // namespace

Checked<FinitePosetTree> validatePosetTree(
    std::span<const uint32_t> nodes,
    const std::function<bool(uint32_t, uint32_t)>& leqRaw, size_t nodeBudget) {
  if (nodes.size() > nodeBudget)
    return Violation{"node-budget", {static_cast<uint64_t>(nodes.size())}};
  if (nodes.empty()) return Violation{"empty-domain", {}};

  for (uint32_t x : nodes)
    if (!leqRaw(x, x)) return Violation{"reflexivity", {x}};

  for (uint32_t x : nodes)
    for (uint32_t y : nodes)
      if (x < y && leqRaw(x, y) && leqRaw(y, x)) return Violation{"antisymmetry", {x, y}};

  std::optional<uint32_t> root;
  for (uint32_t r : nodes) {
    bool greatest = true;
    for (uint32_t x : nodes)
      if (!leqRaw(x, r)) {
        greatest = false;
        break;
      }
    if (greatest) {
      root = r;
      break;
    }
  }
  if (!root) return Violation{"no-greatest-element", {}};

  // Derive each node's parent as the least element strictly above it; the
  // up-set must be a chain.  Checking the full relation against the ancestor
  // closure of the parent map then covers transitivity.
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t x : nodes) {
    if (x == *root) continue;
    std::vector<uint32_t> up;
    for (uint32_t y : nodes)
      if (y != x && leqRaw(x, y)) up.push_back(y);
    uint32_t least = up[0];  // nonempty: root is above everything
    for (uint32_t y : up)
      if (leqRaw(y, least)) least = y;
    for (uint32_t y : up)
      if (!leqRaw(least, y)) return Violation{"up-set-not-chain", {x, least, y}};
    edges.emplace_back(x, least);
  }

  FinitePosetTree t = FinitePosetTree::fromParentEdges(*root, edges);
  for (uint32_t x : nodes)
    for (uint32_t y : nodes)
      if (leqRaw(x, y) != t.leq(x, y)) return Violation{"transitivity", {x, y}};
  return t;
}

BranchingReport branchingReport(const FinitePosetTree& tree) {
  TreeScan scan(tree);
  BranchingReport out;
  std::set<uint32_t> lengths;
  for (size_t i = 0; i < tree.size(); ++i) {
    if (!scan.branching(static_cast<uint32_t>(i))) continue;
    BranchingEntry e;
    e.node = tree.ids[i];
    e.level = scan.branchLevel[i];
    e.length = scan.depth[i] + 1;
    if (!lengths.insert(e.length).second) out.uniquelyBranching = false;
    out.entries.push_back(e);
  }
  return out;  // ids are sorted, so entries are already ascending by node
}

std::optional<FinitePosetTree> levelSubtree(const FinitePosetTree& tree, uint32_t i) {
  TreeScan scan(tree);
  std::vector<uint8_t> keep(tree.size(), 0);
  bool levelNonempty = false;
  for (size_t k = 0; k < tree.size(); ++k) {
    if (!scan.branching(static_cast<uint32_t>(k))) continue;
    uint32_t lvl = scan.branchLevel[k];
    if (lvl == i) levelNonempty = true;
    if (lvl > i) continue;
    for (uint32_t c : scan.children[k]) keep[c] = 1;
    for (int32_t cur = static_cast<int32_t>(k); cur >= 0; cur = tree.parent[cur]) keep[cur] = 1;
  }
  if (!levelNonempty) return std::nullopt;

  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (size_t k = 0; k < tree.size(); ++k) {
    if (!keep[k] || tree.ids[k] == tree.root) continue;
    int32_t cur = tree.parent[k];
    while (cur >= 0 && !keep[cur]) cur = tree.parent[cur];
    edges.emplace_back(tree.ids[k], tree.ids[cur]);
  }
  return FinitePosetTree::fromParentEdges(tree.root, edges);
}

FinitePosetTree attach(const FinitePosetTree& host, uint32_t leaf,
                       const FinitePosetTree& addend) {
  int32_t li = host.indexOf(leaf);
  if (li < 0) throw std::invalid_argument("attach: leaf absent from host");
  for (int32_t p : host.parent)
    if (p == li) throw std::invalid_argument("attach: target is not a leaf");

  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (size_t i = 0; i < host.size(); ++i)
    if (host.parent[i] >= 0) edges.emplace_back(host.ids[i], host.ids[host.parent[i]]);
  for (size_t i = 0; i < addend.size(); ++i) {
    uint32_t id = addend.ids[i];
    if (id == addend.root) continue;
    if (host.contains(id)) throw std::invalid_argument("attach: id collision");
    uint32_t p = addend.ids[addend.parent[i]];
    edges.emplace_back(id, p == addend.root ? leaf : p);
  }
  return FinitePosetTree::fromParentEdges(host.root, edges);
}

Checked<uint32_t> findOpenLeaf(const FinitePosetTree& tree, const std::set<uint32_t>& blocked) {
  for (uint32_t b : blocked)
    if (!tree.contains(b)) return Violation{"blocked-node-absent", {b}};

  TreeScan scan(tree);
  // Premise of the open-leaf lemma, checked on the proper binary collapse:
  // the skeleton root is unblocked and depths >= 1 hold at most one blocked
  // skeleton node each.
  std::map<uint32_t, std::set<uint32_t>> imagePerDepth;
  for (uint32_t b : blocked) {
    uint32_t rep = scan.skeletonOf(static_cast<uint32_t>(tree.indexOf(b)));
    uint32_t repDepth = scan.branchLevel[rep];
    if (repDepth == 0) return Violation{"skeleton-root-blocked", {b}};
    imagePerDepth[repDepth].insert(rep);
  }
  for (auto& [lvl, reps] : imagePerDepth)
    if (reps.size() > 1) {
      std::vector<uint64_t> ws;
      for (uint32_t r : reps) ws.push_back(tree.ids[r]);
      return Violation{"two-blocked-on-level", ws};
    }

  std::vector<uint8_t> isBlocked(tree.size(), 0);
  for (uint32_t b : blocked) isBlocked[tree.indexOf(b)] = 1;
  std::optional<uint32_t> best;
  for (size_t i = 0; i < tree.size(); ++i) {
    if (!scan.leaf(static_cast<uint32_t>(i))) continue;
    bool open = true;
    for (int32_t cur = static_cast<int32_t>(i); cur >= 0; cur = tree.parent[cur])
      if (isBlocked[cur]) {
        open = false;
        break;
      }
    if (open && (!best || tree.ids[i] < *best)) best = tree.ids[i];
  }
  if (!best) return Violation{"no-open-leaf", {}};
  return *best;
}

}  // namespace punct
