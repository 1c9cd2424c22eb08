#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace punct {

/// A finite or cofinite subset of N, kept in canonical form: `support` is the
/// sorted, duplicate-free list of members (cofinite=false) or non-members
/// (cofinite=true).
struct FinCofSet {
  bool cofinite = false;
  std::vector<uint32_t> support;

  static FinCofSet fin(std::initializer_list<uint32_t> xs) { return make(false, xs); }
  static FinCofSet cof(std::initializer_list<uint32_t> xs) { return make(true, xs); }
  static FinCofSet fin(std::vector<uint32_t> xs) { return make(false, std::move(xs)); }
  static FinCofSet cof(std::vector<uint32_t> xs) { return make(true, std::move(xs)); }
  static FinCofSet empty() { return {}; }
  static FinCofSet full() { return {true, {}}; }

  static FinCofSet make(bool cofinite, std::vector<uint32_t> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return {cofinite, std::move(xs)};
  }
  static FinCofSet make(bool cofinite, std::initializer_list<uint32_t> xs) {
    return make(cofinite, std::vector<uint32_t>(xs));
  }

  bool isEmpty() const { return !cofinite && support.empty(); }
  bool isFull() const { return cofinite && support.empty(); }
  bool isFinite() const { return !cofinite; }

  bool contains(uint32_t x) const {
    bool inSupport = std::binary_search(support.begin(), support.end(), x);
    return cofinite ? !inSupport : inSupport;
  }

  friend bool operator==(const FinCofSet&, const FinCofSet&) = default;
  friend auto operator<=>(const FinCofSet&, const FinCofSet&) = default;
};

namespace detail {

inline std::vector<uint32_t> vecUnion(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<uint32_t> vecIntersect(const std::vector<uint32_t>& a,
                                          const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<uint32_t> vecDiff(const std::vector<uint32_t>& a,
                                     const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

inline FinCofSet setComplement(const FinCofSet& a) { return {!a.cofinite, a.support}; }

inline FinCofSet setUnion(const FinCofSet& a, const FinCofSet& b) {
  using namespace detail;
  if (!a.cofinite && !b.cofinite) return {false, vecUnion(a.support, b.support)};
  if (a.cofinite && b.cofinite) return {true, vecIntersect(a.support, b.support)};
  // one finite, one cofinite: result is cofinite
  const FinCofSet& f = a.cofinite ? b : a;
  const FinCofSet& c = a.cofinite ? a : b;
  return {true, vecDiff(c.support, f.support)};
}

inline FinCofSet setMeet(const FinCofSet& a, const FinCofSet& b) {
  return setComplement(setUnion(setComplement(a), setComplement(b)));
}

inline bool setSubset(const FinCofSet& a, const FinCofSet& b) {
  return setMeet(a, b) == a;
}

inline std::string toString(const FinCofSet& s) {
  std::string out = s.cofinite ? "cof{" : "fin{";
  for (size_t i = 0; i < s.support.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.support[i]);
  }
  out += '}';
  return out;
}

}  // namespace punct
