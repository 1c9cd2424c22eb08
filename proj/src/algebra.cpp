#include "punct/algebra.hpp"

#include <cctype>
#include <set>

#include "punct/subalgebra.hpp"

namespace punct {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  bool literal(const char* lit) {
    size_t p = pos;
    for (const char* c = lit; *c; ++c, ++p)
      if (p >= s.size() || s[p] != *c) return false;
    pos = p;
    return true;
  }
  bool number(uint32_t& out) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    unsigned long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 0xffffffffull) return false;
      ++pos;
    }
    out = static_cast<uint32_t>(v);
    return true;
  }
};

bool parseSide(Cursor& c, FinCofSet& out) {
  bool cof;
  if (c.literal("fin{"))
    cof = false;
  else if (c.literal("cof{"))
    cof = true;
  else
    return false;
  std::vector<uint32_t> xs;
  if (!c.literal("}")) {
    for (;;) {
      uint32_t n;
      if (!c.number(n)) return false;
      xs.push_back(n);
      if (c.literal("}")) break;
      if (!c.literal(",")) return false;
    }
  }
  // canonical form required: sorted, no duplicates
  for (size_t i = 1; i < xs.size(); ++i)
    if (xs[i - 1] >= xs[i]) return false;
  out = FinCofSet{cof, std::move(xs)};
  return true;
}

}  // namespace

std::optional<AlgebraElement> parseElement(const std::string& text) {
  Cursor c{text};
  AlgebraElement e;
  if (!c.literal("(")) return std::nullopt;
  if (!parseSide(c, e.left)) return std::nullopt;
  if (!c.literal(" ; ")) return std::nullopt;
  if (!parseSide(c, e.right)) return std::nullopt;
  if (!c.literal(")")) return std::nullopt;
  if (c.pos != text.size()) return std::nullopt;
  return e;
}

FiniteSubalgebra generatedSubalgebra(std::vector<AlgebraElement> generators) {
  // Fold one generator at a time: after step k the set holds the values of all
  // epsilon products over the first k generators.  Deduplication keeps the set
  // at the size of the final atom list instead of 2^k.
  std::set<AlgebraElement> products{AlgebraElement::one()};
  for (const auto& g : generators) {
    std::set<AlgebraElement> next;
    for (const auto& e : products) {
      next.insert(meet(e, g));
      next.insert(meet(e, complement(g)));
    }
    products = std::move(next);
  }
  FiniteSubalgebra out;
  out.generators = std::move(generators);
  for (const auto& e : products)
    if (!e.isZero()) out.atomList.push_back(e);
  return out;
}

}  // namespace punct
