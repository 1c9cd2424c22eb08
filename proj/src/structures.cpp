#include "punct/structures.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace punct {

bool RpoTree::contains(uint32_t id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

bool PrefixTree::hasPath(const std::vector<uint32_t>& p) const {
  return std::binary_search(paths.begin(), paths.end(), p);
}

Checked<RpoTree> validateRpoTree(std::span<const uint32_t> nodes,
                                 std::span<const std::pair<uint32_t, uint32_t>> predPairs,
                                 std::span<const std::pair<uint32_t, uint32_t>> ltPairs,
                                 uint32_t root, size_t nodeBudget) {
  if (nodes.size() > nodeBudget)
    return Violation{"node-budget", {static_cast<uint64_t>(nodes.size())}};
  RpoTree t;
  t.ids.assign(nodes.begin(), nodes.end());
  std::sort(t.ids.begin(), t.ids.end());
  t.ids.erase(std::unique(t.ids.begin(), t.ids.end()), t.ids.end());
  t.root = root;
  if (!t.contains(root)) return Violation{"root-absent", {root}};

  for (auto [c, p] : predPairs) {
    if (!t.contains(c) || !t.contains(p)) return Violation{"edge-endpoint-absent", {c, p}};
    if (c == root) return Violation{"root-has-parent", {c, p}};
    if (t.pred.count(c)) return Violation{"two-parents", {c, t.pred[c], p}};
    t.pred[c] = p;
  }
  for (uint32_t x : t.ids)
    if (x != root && !t.pred.count(x)) return Violation{"disconnected", {x}};
  // acyclicity: chains terminate at the root
  for (uint32_t x : t.ids) {
    size_t steps = 0;
    uint32_t cur = x;
    while (cur != root) {
      cur = t.pred.at(cur);
      if (++steps > t.ids.size()) return Violation{"cycle", {x}};
    }
  }

  // clause 2: comparable iff same parent, and linear on each sibling group
  std::map<uint32_t, std::set<std::pair<uint32_t, uint32_t>>> ltBySibGroup;
  for (auto [a, b] : ltPairs) {
    if (!t.contains(a) || !t.contains(b)) return Violation{"order-endpoint-absent", {a, b}};
    if (a == root || b == root || t.pred.at(a) != t.pred.at(b))
      return Violation{"comparable-without-shared-parent", {a, b}};
    if (a == b) return Violation{"order-irreflexivity", {a}};
    ltBySibGroup[t.pred.at(a)].insert({a, b});
  }
  std::map<uint32_t, std::vector<uint32_t>> groups;
  for (uint32_t x : t.ids)
    if (x != root) groups[t.pred.at(x)].push_back(x);
  for (auto& [p, sibs] : groups) {
    auto& lt = ltBySibGroup[p];
    for (uint32_t a : sibs)
      for (uint32_t b : sibs) {
        if (a == b) continue;
        bool ab = lt.count({a, b}), ba = lt.count({b, a});
        if (ab && ba) return Violation{"order-antisymmetry", {a, b}};
        if (!ab && !ba) return Violation{"siblings-incomparable", {a, b}};
      }
    for (uint32_t a : sibs)
      for (uint32_t b : sibs)
        for (uint32_t c : sibs)
          if (lt.count({a, b}) && lt.count({b, c}) && !lt.count({a, c}))
            return Violation{"order-transitivity", {a, b, c}};
    std::vector<uint32_t> ordered = sibs;
    std::sort(ordered.begin(), ordered.end(),
              [&](uint32_t a, uint32_t b) { return lt.count({a, b}) > 0; });
    t.childOrder[p] = std::move(ordered);
  }
  return t;
}

Checked<SuccessorTree> validateSuccessorTree(std::span<const uint32_t> nodes,
                                             const std::unordered_map<uint32_t, uint32_t>& s1,
                                             const std::unordered_map<uint32_t, uint32_t>& s2,
                                             uint32_t empty, uint32_t root, size_t nodeBudget) {
  if (nodes.size() > nodeBudget)
    return Violation{"node-budget", {static_cast<uint64_t>(nodes.size())}};
  SuccessorTree t;
  t.ids.assign(nodes.begin(), nodes.end());
  std::sort(t.ids.begin(), t.ids.end());
  t.ids.erase(std::unique(t.ids.begin(), t.ids.end()), t.ids.end());
  t.empty = empty;
  t.root = root;
  for (uint32_t x : t.ids)
    if (!s1.count(x) || !s2.count(x)) return Violation{"successor-undefined", {x}};
  t.s1 = s1;
  t.s2 = s2;

  // clause 4
  if (t.left(empty) != empty || t.right(empty) != empty)
    return Violation{"empty-node-successors", {empty}};
  // clause 1: injectivity off the preimage of the empty node
  for (const auto* s : {&t.s1, &t.s2}) {
    std::map<uint32_t, uint32_t> seen;
    for (auto [x, y] : *s) {
      if (y == empty || x == empty) continue;
      auto [it, fresh] = seen.emplace(y, x);
      if (!fresh) return Violation{"successor-not-injective", {it->second, x, y}};
    }
  }
  // clause 2: ranges meet only in the empty node
  for (auto [x, y] : t.s1) {
    if (y == empty) continue;
    for (auto [x2, y2] : t.s2)
      if (y2 == y) return Violation{"ranges-overlap", {x, x2, y}};
  }
  // clause 3: every non-root node is some successor (empty is in both ranges)
  for (uint32_t x : t.ids) {
    if (x == root || x == empty) continue;
    bool hit = false;
    for (const auto* s : {&t.s1, &t.s2})
      for (auto [a, y] : *s)
        if (y == x && a != empty) hit = true;
    if (!hit) return Violation{"node-not-in-ranges", {x}};
  }
  // clause 1: no cycles
  for (uint32_t x : t.ids) {
    uint32_t cur = x;
    size_t steps = 0;
    while (cur != empty) {
      cur = t.left(cur);
      if (cur == x && x != empty) return Violation{"cycle", {x}};
      if (++steps > t.ids.size()) break;
    }
  }
  return t;
}

Checked<PrefixTree> validatePrefixTree(std::span<const std::vector<uint32_t>> paths,
                                       size_t nodeBudget) {
  if (paths.size() > nodeBudget)
    return Violation{"node-budget", {static_cast<uint64_t>(paths.size())}};
  PrefixTree t;
  t.paths.assign(paths.begin(), paths.end());
  std::sort(t.paths.begin(), t.paths.end());
  t.paths.erase(std::unique(t.paths.begin(), t.paths.end()), t.paths.end());
  if (t.paths.empty() || t.paths.front().empty()) return Violation{"no-root-path", {}};

  size_t rootPaths = 0;
  for (const auto& p : t.paths)
    if (p.size() == 1) {
      ++rootPaths;
      t.root = p[0];
    }
  if (rootPaths != 1) return Violation{"root-path-not-unique", {rootPaths}};
  for (const auto& p : t.paths) {
    if (p.front() != t.root) return Violation{"path-not-root-anchored", {p.front()}};
    std::vector<uint32_t> prefix(p.begin(), p.end() - 1);
    if (!prefix.empty() && !t.hasPath(prefix))
      return Violation{"prefix-missing", {p.back()}};
  }
  // injectivity: a node determines its full path
  t.injective = true;
  std::map<uint32_t, std::vector<uint32_t>> tipPath;
  for (const auto& p : t.paths) {
    auto [it, fresh] = tipPath.emplace(p.back(), p);
    if (!fresh && it->second != p) t.injective = false;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

/// AHU-style canonical code for unordered rooted trees over dense indices.
struct Canonizer {
  std::map<std::vector<uint32_t>, uint32_t> codes;

  uint32_t codeFor(std::vector<uint32_t> childCodes) {
    std::sort(childCodes.begin(), childCodes.end());
    auto [it, fresh] = codes.emplace(std::move(childCodes), static_cast<uint32_t>(codes.size()));
    return it->second;
  }
};

uint32_t canonize(const std::vector<std::vector<uint32_t>>& children, uint32_t node,
                  Canonizer& cz, std::vector<uint32_t>& out) {
  std::vector<uint32_t> cc;
  for (uint32_t c : children[node]) cc.push_back(canonize(children, c, cz, out));
  return out[node] = cz.codeFor(std::move(cc));
}

/// Pairs nodes of two canonically-equal trees; ambiguous siblings matched in
/// (code, id) order so the witness is deterministic.
void pairUp(const FinitePosetTree& ta, const std::vector<std::vector<uint32_t>>& cha,
            const std::vector<uint32_t>& codeA, uint32_t a, const FinitePosetTree& tb,
            const std::vector<std::vector<uint32_t>>& chb, const std::vector<uint32_t>& codeB,
            uint32_t b, IsoWitness& w) {
  w.map.emplace_back(ta.ids[a], tb.ids[b]);
  std::vector<uint32_t> ca = cha[a], cb = chb[b];
  std::sort(ca.begin(), ca.end(), [&ta, &codeA](uint32_t x, uint32_t y) {
    return std::pair(codeA[x], ta.ids[x]) < std::pair(codeA[y], ta.ids[y]);
  });
  std::sort(cb.begin(), cb.end(), [&tb, &codeB](uint32_t x, uint32_t y) {
    return std::pair(codeB[x], tb.ids[x]) < std::pair(codeB[y], tb.ids[y]);
  });
  for (size_t i = 0; i < ca.size(); ++i)
    pairUp(ta, cha, codeA, ca[i], tb, chb, codeB, cb[i], w);
}

}  // namespace

std::optional<IsoWitness> isomorphic(const FinitePosetTree& a, const FinitePosetTree& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto cha = a.childrenByIndex(), chb = b.childrenByIndex();
  Canonizer cz;
  std::vector<uint32_t> codeA(a.size()), codeB(b.size());
  uint32_t ra = static_cast<uint32_t>(a.indexOf(a.root));
  uint32_t rb = static_cast<uint32_t>(b.indexOf(b.root));
  if (canonize(cha, ra, cz, codeA) != canonize(chb, rb, cz, codeB)) return std::nullopt;
  IsoWitness w;
  pairUp(a, cha, codeA, ra, b, chb, codeB, rb, w);
  std::sort(w.map.begin(), w.map.end());
  return w;
}

bool checkWitness(const FinitePosetTree& a, const FinitePosetTree& b, const IsoWitness& w) {
  if (w.map.size() != a.size() || a.size() != b.size()) return false;
  std::map<uint32_t, uint32_t> f(w.map.begin(), w.map.end());
  std::set<uint32_t> image;
  for (auto [x, y] : f) image.insert(y);
  if (f.size() != a.size() || image.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    uint32_t x = a.ids[i];
    uint32_t px = a.parent[i] >= 0 ? a.ids[a.parent[i]] : x;
    int32_t yi = b.indexOf(f.at(x));
    if (yi < 0) return false;
    uint32_t py = b.parent[yi] >= 0 ? b.ids[b.parent[yi]] : f.at(x);
    if (f.at(px) != py) return false;
  }
  return true;
}

std::optional<IsoWitness> isomorphicPosetBacktracking(const FinitePosetTree& a,
                                                      const FinitePosetTree& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto cha = a.childrenByIndex(), chb = b.childrenByIndex();

  std::vector<std::pair<uint32_t, uint32_t>> trail;  // dense index pairs, in order
  std::function<bool(uint32_t, uint32_t)> tryMap = [&](uint32_t x, uint32_t y) {
    if (cha[x].size() != chb[y].size()) return false;
    size_t mark = trail.size();
    trail.emplace_back(x, y);
    const auto& xs = cha[x];
    std::vector<uint32_t> ys = chb[y];
    std::sort(ys.begin(), ys.end());
    // try all injections of xs into ys, deterministically
    std::function<bool(size_t, std::vector<uint32_t>&)> place = [&](size_t k,
                                                                    std::vector<uint32_t>& rem) {
      if (k == xs.size()) return true;
      for (size_t pick = 0; pick < rem.size(); ++pick) {
        uint32_t y2 = rem[pick];
        size_t submark = trail.size();
        if (tryMap(xs[k], y2)) {
          std::vector<uint32_t> rest = rem;
          rest.erase(rest.begin() + static_cast<long>(pick));
          if (place(k + 1, rest)) return true;
        }
        trail.resize(submark);
      }
      return false;
    };
    if (place(0, ys)) return true;
    trail.resize(mark);
    return false;
  };
  uint32_t ra = static_cast<uint32_t>(a.indexOf(a.root));
  uint32_t rb = static_cast<uint32_t>(b.indexOf(b.root));
  if (!tryMap(ra, rb)) return std::nullopt;
  IsoWitness w;
  for (auto [x, y] : trail) w.map.emplace_back(a.ids[x], b.ids[y]);
  std::sort(w.map.begin(), w.map.end());
  return w;
}

std::optional<IsoWitness> isomorphic(const RpoTree& a, const RpoTree& b) {
  if (a.size() != b.size()) return std::nullopt;
  // ordered-children recursion: the sibling order pins the pairing
  IsoWitness w;
  std::function<bool(uint32_t, uint32_t)> go = [&](uint32_t x, uint32_t y) {
    w.map.emplace_back(x, y);
    auto cxIt = a.childOrder.find(x);
    auto cyIt = b.childOrder.find(y);
    size_t nx = cxIt == a.childOrder.end() ? 0 : cxIt->second.size();
    size_t ny = cyIt == b.childOrder.end() ? 0 : cyIt->second.size();
    if (nx != ny) return false;
    for (size_t i = 0; i < nx; ++i)
      if (!go(cxIt->second[i], cyIt->second[i])) return false;
    return true;
  };
  if (!go(a.root, b.root)) return std::nullopt;
  std::sort(w.map.begin(), w.map.end());
  return w;
}

std::optional<IsoWitness> isomorphic(const SuccessorTree& a, const SuccessorTree& b) {
  if (a.size() != b.size()) return std::nullopt;
  IsoWitness w;
  w.map.emplace_back(a.empty, b.empty);
  std::function<bool(uint32_t, uint32_t)> go = [&](uint32_t x, uint32_t y) {
    if ((x == a.empty) != (y == b.empty)) return false;
    if (x == a.empty) return true;
    w.map.emplace_back(x, y);
    return go(a.left(x), b.left(y)) && go(a.right(x), b.right(y));
  };
  if (!go(a.root, b.root)) return std::nullopt;
  if (w.map.size() != a.size()) return std::nullopt;  // unreachable nodes differ
  std::sort(w.map.begin(), w.map.end());
  return w;
}

std::optional<IsoWitness> isomorphic(const PrefixTree& a, const PrefixTree& b) {
  if (a.pathCount() != b.pathCount()) return std::nullopt;
  // Nodes are path tips; injective prefix trees reduce to unordered rooted
  // tree isomorphism over the path tree.
  auto buildTree = [](const PrefixTree& t) {
    std::map<std::vector<uint32_t>, uint32_t> index;
    for (const auto& p : t.paths) index.emplace(p, static_cast<uint32_t>(index.size()));
    std::vector<std::vector<uint32_t>> children(index.size());
    uint32_t root = 0;
    for (const auto& [p, i] : index) {
      if (p.size() == 1) {
        root = i;
        continue;
      }
      std::vector<uint32_t> prefix(p.begin(), p.end() - 1);
      children[index.at(prefix)].push_back(i);
    }
    return std::pair(children, root);
  };
  auto [cha, ra] = buildTree(a);
  auto [chb, rb] = buildTree(b);
  Canonizer cz;
  std::vector<uint32_t> codeA(a.pathCount()), codeB(b.pathCount());
  if (canonize(cha, ra, cz, codeA) != canonize(chb, rb, cz, codeB)) return std::nullopt;
  // witness on node ids (path tips); pair by code then path order
  IsoWitness w;
  std::function<void(uint32_t, uint32_t)> pair2 = [&](uint32_t x, uint32_t y) {
    w.map.emplace_back(a.paths[x].back(), b.paths[y].back());
    auto ca = cha[x];
    auto cb = chb[y];
    auto by = [&](const std::vector<uint32_t>& code) {
      return [&code](uint32_t p, uint32_t q) { return code[p] < code[q]; };
    };
    std::stable_sort(ca.begin(), ca.end(), by(codeA));
    std::stable_sort(cb.begin(), cb.end(), by(codeB));
    for (size_t i = 0; i < ca.size(); ++i) pair2(ca[i], cb[i]);
  };
  pair2(ra, rb);
  std::sort(w.map.begin(), w.map.end());
  return w;
}

}  // namespace punct
