#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "punct/poset_tree.hpp"

namespace punct {

/// Relational predecessor tree with ordering: parent map plus a linear order
/// on each sibling group (two nodes are order-comparable iff they share a
/// parent).
struct RpoTree {
  std::vector<uint32_t> ids;  // sorted
  std::unordered_map<uint32_t, uint32_t> pred;
  std::unordered_map<uint32_t, std::vector<uint32_t>> childOrder;  // parent -> ascending
  uint32_t root = 0;

  size_t size() const { return ids.size(); }
  bool contains(uint32_t id) const;
  bool operator==(const RpoTree& o) const {
    return ids == o.ids && pred == o.pred && childOrder == o.childOrder && root == o.root;
  }
};

/// Binary successor tree: total left/right successor maps, an empty node, and
/// a root.
struct SuccessorTree {
  std::vector<uint32_t> ids;  // sorted; includes empty and root
  std::unordered_map<uint32_t, uint32_t> s1, s2;
  uint32_t empty = 0;
  uint32_t root = 0;

  size_t size() const { return ids.size(); }
  uint32_t left(uint32_t x) const { return s1.at(x); }
  uint32_t right(uint32_t x) const { return s2.at(x); }
  bool operator==(const SuccessorTree& o) const {
    return ids == o.ids && s1 == o.s1 && s2 == o.s2 && empty == o.empty && root == o.root;
  }
};

/// Prefix tree: the set of root-anchored paths, stratified by arity.
struct PrefixTree {
  std::vector<std::vector<uint32_t>> paths;  // sorted lexicographically
  uint32_t root = 0;
  bool injective = false;

  size_t pathCount() const { return paths.size(); }
  bool hasPath(const std::vector<uint32_t>& p) const;
  bool operator==(const PrefixTree& o) const {
    return paths == o.paths && root == o.root;
  }
};

Checked<RpoTree> validateRpoTree(std::span<const uint32_t> nodes,
                                 std::span<const std::pair<uint32_t, uint32_t>> predPairs,
                                 std::span<const std::pair<uint32_t, uint32_t>> ltPairs,
                                 uint32_t root, size_t nodeBudget = kDefaultNodeBudget);

Checked<SuccessorTree> validateSuccessorTree(std::span<const uint32_t> nodes,
                                             const std::unordered_map<uint32_t, uint32_t>& s1,
                                             const std::unordered_map<uint32_t, uint32_t>& s2,
                                             uint32_t empty, uint32_t root,
                                             size_t nodeBudget = kDefaultNodeBudget);

Checked<PrefixTree> validatePrefixTree(std::span<const std::vector<uint32_t>> paths,
                                       size_t nodeBudget = kDefaultNodeBudget);

/// Witness map for an isomorphism, as (node of a, node of b) pairs sorted by
/// the first component.
struct IsoWitness {
  std::vector<std::pair<uint32_t, uint32_t>> map;

  std::optional<uint32_t> image(uint32_t x) const {
    for (auto [a, b] : map)
      if (a == x) return b;
    return std::nullopt;
  }
};

std::optional<IsoWitness> isomorphic(const FinitePosetTree& a, const FinitePosetTree& b);
std::optional<IsoWitness> isomorphic(const RpoTree& a, const RpoTree& b);
std::optional<IsoWitness> isomorphic(const SuccessorTree& a, const SuccessorTree& b);
std::optional<IsoWitness> isomorphic(const PrefixTree& a, const PrefixTree& b);

/// Exhaustive backtracking oracle for poset trees; exponential, test-sized
/// inputs only.
std::optional<IsoWitness> isomorphicPosetBacktracking(const FinitePosetTree& a,
                                                      const FinitePosetTree& b);

bool checkWitness(const FinitePosetTree& a, const FinitePosetTree& b, const IsoWitness& w);

}  // namespace punct
