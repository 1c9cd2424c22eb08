#include "punct/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace punct {

namespace {

std::string header(const char* kind, size_t n) {
  return std::string("kind=") + kind + " n=" + std::to_string(n) + "\n";
}

std::vector<std::string> splitLines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

bool parseU32(const std::string& s, uint32_t& out) {
  if (s.empty()) return false;
  unsigned long long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<unsigned>(c - '0');
    if (v > 0xffffffffull) return false;
  }
  out = static_cast<uint32_t>(v);
  return true;
}

}  // namespace

std::string serialize(const FinitePosetTree& t) {
  std::string out = header("poset", t.size());
  out += "root " + std::to_string(t.root) + "\n";
  for (size_t i = 0; i < t.size(); ++i)
    if (t.parent[i] >= 0)
      out += "adj " + std::to_string(t.ids[i]) + " " + std::to_string(t.ids[t.parent[i]]) + "\n";
  return out;
}

std::string serialize(const RpoTree& t) {
  std::string out = header("rpo", t.size());
  out += "root " + std::to_string(t.root) + "\n";
  for (uint32_t id : t.ids) {
    auto it = t.pred.find(id);
    if (it != t.pred.end())
      out += "pred " + std::to_string(id) + " " + std::to_string(it->second) + "\n";
  }
  std::vector<uint32_t> parents;
  for (const auto& [p, _] : t.childOrder) parents.push_back(p);
  std::sort(parents.begin(), parents.end());
  for (uint32_t p : parents) {
    const auto& order = t.childOrder.at(p);
    for (size_t i = 0; i + 1 < order.size(); ++i)
      out += "sib " + std::to_string(order[i]) + " " + std::to_string(order[i + 1]) + "\n";
  }
  return out;
}

std::string serialize(const SuccessorTree& t) {
  std::string out = header("succ", t.size());
  out += "empty " + std::to_string(t.empty) + "\n";
  out += "root " + std::to_string(t.root) + "\n";
  for (uint32_t id : t.ids)
    out += "s1 " + std::to_string(id) + " " + std::to_string(t.left(id)) + "\n";
  for (uint32_t id : t.ids)
    out += "s2 " + std::to_string(id) + " " + std::to_string(t.right(id)) + "\n";
  return out;
}

std::string serialize(const PrefixTree& t) {
  std::string out = header("prefix", t.pathCount());
  for (const auto& p : t.paths) {
    out += "path";
    for (uint32_t x : p) out += " " + std::to_string(x);
    out += "\n";
  }
  return out;
}

std::string serialize(const AnyStructure& s) {
  return std::visit([](const auto& t) { return serialize(t); }, s);
}

Checked<AnyStructure> parseStructure(const std::string& text) {
  auto lines = splitLines(text);
  if (lines.empty()) return Violation{"empty-input", {}};
  auto head = tokens(lines[0]);
  if (head.size() != 2 || head[0].rfind("kind=", 0) != 0 || head[1].rfind("n=", 0) != 0)
    return Violation{"bad-header", {}};
  std::string kind = head[0].substr(5);
  uint32_t n = 0;
  if (!parseU32(head[1].substr(2), n)) return Violation{"bad-header", {}};

  if (kind == "poset") {
    std::optional<uint32_t> root;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::vector<uint32_t> nodes;
    for (size_t i = 1; i < lines.size(); ++i) {
      auto ts = tokens(lines[i]);
      uint32_t a, b;
      if (ts.size() == 2 && ts[0] == "root" && parseU32(ts[1], a)) {
        root = a;
        nodes.push_back(a);
      } else if (ts.size() == 3 && ts[0] == "adj" && parseU32(ts[1], a) && parseU32(ts[2], b)) {
        edges.emplace_back(a, b);
        nodes.push_back(a);
        nodes.push_back(b);
      } else {
        return Violation{"bad-line", {static_cast<uint64_t>(i)}};
      }
    }
    if (!root) return Violation{"missing-root", {}};
    FinitePosetTree t;
    try {
      t = FinitePosetTree::fromParentEdges(*root, edges);
    } catch (const std::invalid_argument&) {
      return Violation{"malformed-tree", {}};
    }
    if (t.size() != n) return Violation{"count-mismatch", {n, t.size()}};
    return AnyStructure{std::move(t)};
  }

  if (kind == "rpo") {
    std::optional<uint32_t> root;
    std::vector<std::pair<uint32_t, uint32_t>> preds, sibs;
    std::vector<uint32_t> nodes;
    for (size_t i = 1; i < lines.size(); ++i) {
      auto ts = tokens(lines[i]);
      uint32_t a, b;
      if (ts.size() == 2 && ts[0] == "root" && parseU32(ts[1], a)) {
        root = a;
        nodes.push_back(a);
      } else if (ts.size() == 3 && ts[0] == "pred" && parseU32(ts[1], a) && parseU32(ts[2], b)) {
        preds.emplace_back(a, b);
        nodes.push_back(a);
        nodes.push_back(b);
      } else if (ts.size() == 3 && ts[0] == "sib" && parseU32(ts[1], a) && parseU32(ts[2], b)) {
        sibs.emplace_back(a, b);
      } else {
        return Violation{"bad-line", {static_cast<uint64_t>(i)}};
      }
    }
    if (!root) return Violation{"missing-root", {}};
    // `sib a b` records cover pairs; expand per sibling group to a full order
    std::unordered_map<uint32_t, uint32_t> pred;
    for (auto [c, p] : preds) pred[c] = p;
    std::unordered_map<uint32_t, std::vector<std::pair<uint32_t, uint32_t>>> coverByParent;
    for (auto [a, b] : sibs) {
      auto ia = pred.find(a), ib = pred.find(b);
      if (ia == pred.end() || ib == pred.end() || ia->second != ib->second)
        return Violation{"sib-without-shared-parent", {a, b}};
      coverByParent[ia->second].emplace_back(a, b);
    }
    std::vector<std::pair<uint32_t, uint32_t>> lt;
    for (auto& [p, covers] : coverByParent) {
      std::unordered_map<uint32_t, uint32_t> next;
      std::set<uint32_t> heads, tails;
      for (auto [a, b] : covers) {
        if (!next.emplace(a, b).second) return Violation{"sib-chain-fork", {a}};
        heads.insert(a);
        tails.insert(b);
      }
      for (uint32_t t2 : tails) heads.erase(t2);
      if (heads.size() != 1) return Violation{"sib-chain-broken", {p}};
      std::vector<uint32_t> chain{*heads.begin()};
      while (next.count(chain.back())) chain.push_back(next.at(chain.back()));
      if (chain.size() != covers.size() + 1) return Violation{"sib-chain-broken", {p}};
      for (size_t i = 0; i < chain.size(); ++i)
        for (size_t j = i + 1; j < chain.size(); ++j) lt.emplace_back(chain[i], chain[j]);
    }
    auto checked = validateRpoTree(nodes, preds, lt, *root);
    if (auto* v = std::get_if<Violation>(&checked)) return *v;
    auto t = std::get<RpoTree>(std::move(checked));
    if (t.size() != n) return Violation{"count-mismatch", {n, t.size()}};
    return AnyStructure{std::move(t)};
  }

  if (kind == "succ") {
    std::optional<uint32_t> root, empty;
    std::unordered_map<uint32_t, uint32_t> s1, s2;
    std::vector<uint32_t> nodes;
    for (size_t i = 1; i < lines.size(); ++i) {
      auto ts = tokens(lines[i]);
      uint32_t a, b;
      if (ts.size() == 2 && ts[0] == "root" && parseU32(ts[1], a)) {
        root = a;
        nodes.push_back(a);
      } else if (ts.size() == 2 && ts[0] == "empty" && parseU32(ts[1], a)) {
        empty = a;
        nodes.push_back(a);
      } else if (ts.size() == 3 && (ts[0] == "s1" || ts[0] == "s2") && parseU32(ts[1], a) &&
                 parseU32(ts[2], b)) {
        (ts[0] == "s1" ? s1 : s2)[a] = b;
        nodes.push_back(a);
        nodes.push_back(b);
      } else {
        return Violation{"bad-line", {static_cast<uint64_t>(i)}};
      }
    }
    if (!root || !empty) return Violation{"missing-root-or-empty", {}};
    auto checked = validateSuccessorTree(nodes, s1, s2, *empty, *root);
    if (auto* v = std::get_if<Violation>(&checked)) return *v;
    auto t = std::get<SuccessorTree>(std::move(checked));
    if (t.size() != n) return Violation{"count-mismatch", {n, t.size()}};
    return AnyStructure{std::move(t)};
  }

  if (kind == "prefix") {
    std::vector<std::vector<uint32_t>> paths;
    for (size_t i = 1; i < lines.size(); ++i) {
      auto ts = tokens(lines[i]);
      if (ts.empty() || ts[0] != "path" || ts.size() < 2)
        return Violation{"bad-line", {static_cast<uint64_t>(i)}};
      std::vector<uint32_t> p;
      for (size_t k = 1; k < ts.size(); ++k) {
        uint32_t x;
        if (!parseU32(ts[k], x)) return Violation{"bad-line", {static_cast<uint64_t>(i)}};
        p.push_back(x);
      }
      paths.push_back(std::move(p));
    }
    auto checked = validatePrefixTree(paths);
    if (auto* v = std::get_if<Violation>(&checked)) return *v;
    auto t = std::get<PrefixTree>(std::move(checked));
    if (t.pathCount() != n) return Violation{"count-mismatch", {n, t.pathCount()}};
    return AnyStructure{std::move(t)};
  }

  return Violation{"unknown-kind", {}};
}

}  // namespace punct
