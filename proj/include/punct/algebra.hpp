#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "punct/fincof.hpp"

namespace punct {

/// An element of B(N) x B(N), the product of two copies of the Boolean
/// algebra of finite and cofinite subsets of N.
struct AlgebraElement {
  FinCofSet left;
  FinCofSet right;

  static AlgebraElement zero() { return {FinCofSet::empty(), FinCofSet::empty()}; }
  static AlgebraElement one() { return {FinCofSet::full(), FinCofSet::full()}; }
  static AlgebraElement top0() { return {FinCofSet::full(), FinCofSet::empty()}; }
  static AlgebraElement top1() { return {FinCofSet::empty(), FinCofSet::full()}; }

  /// u_i = ({i}, 0) and v_i = (0, {i}); these enumerate all atoms.
  static AlgebraElement atomU(uint32_t i) { return {FinCofSet::fin({i}), FinCofSet::empty()}; }
  static AlgebraElement atomV(uint32_t i) { return {FinCofSet::empty(), FinCofSet::fin({i})}; }

  bool isZero() const { return left.isEmpty() && right.isEmpty(); }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  friend auto operator<=>(const AlgebraElement&, const AlgebraElement&) = default;
};

inline AlgebraElement join(const AlgebraElement& x, const AlgebraElement& y) {
  return {setUnion(x.left, y.left), setUnion(x.right, y.right)};
}

inline AlgebraElement meet(const AlgebraElement& x, const AlgebraElement& y) {
  return {setMeet(x.left, y.left), setMeet(x.right, y.right)};
}

inline AlgebraElement complement(const AlgebraElement& x) {
  return {setComplement(x.left), setComplement(x.right)};
}

inline bool leq(const AlgebraElement& x, const AlgebraElement& y) {
  return join(x, y) == y;
}

/// Membership in the Frechet ideal: both components finite.
inline bool inFrechet(const AlgebraElement& x) {
  return x.left.isFinite() && x.right.isFinite();
}

/// Either u_i or v_i, addressed by side (0 = left, 1 = right) and index.
struct AtomRef {
  uint8_t side = 0;
  uint32_t index = 0;

  AlgebraElement element() const {
    return side == 0 ? AlgebraElement::atomU(index) : AlgebraElement::atomV(index);
  }
  friend bool operator==(const AtomRef&, const AtomRef&) = default;
  friend auto operator<=>(const AtomRef&, const AtomRef&) = default;
};

/// Atoms of B below a Frechet element, in (side, index) order.
inline std::vector<AtomRef> atomsBelow(const AlgebraElement& x) {
  if (!inFrechet(x)) throw std::invalid_argument("atomsBelow: element not in Frechet ideal");
  std::vector<AtomRef> out;
  for (uint32_t i : x.left.support) out.push_back({0, i});
  for (uint32_t i : x.right.support) out.push_back({1, i});
  return out;
}

/// a^0 = C(a), a^1 = a; the product of the tuple under the sign vector.
inline AlgebraElement epsilonProduct(std::span<const AlgebraElement> tuple,
                                     std::span<const uint8_t> signs) {
  if (tuple.size() != signs.size())
    throw std::invalid_argument("epsilonProduct: tuple/sign length mismatch");
  AlgebraElement acc = AlgebraElement::one();
  for (size_t i = 0; i < tuple.size(); ++i)
    acc = meet(acc, signs[i] ? tuple[i] : complement(tuple[i]));
  return acc;
}

/// Literal syntax `(fin{0,2} ; cof{1})`, bit-exact with parseElement.
inline std::string toString(const AlgebraElement& x) {
  return "(" + toString(x.left) + " ; " + toString(x.right) + ")";
}

std::optional<AlgebraElement> parseElement(const std::string& text);

}  // namespace punct
