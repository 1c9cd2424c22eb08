#pragma once

#include <cstdint>
#include <vector>

#include "punct/algebra.hpp"

namespace punct {

/// A finite subalgebra of B(N) x B(N), represented by its atoms.  The atoms
/// are pairwise disjoint, nonzero, and join to 1; every member is a finite
/// join of atoms.
struct FiniteSubalgebra {
  std::vector<AlgebraElement> atomList;
  std::vector<AlgebraElement> generators;

  size_t atomCount() const { return atomList.size(); }

  /// 2^atoms, the number of elements; guarded against overflow.
  unsigned long long cardinality() const {
    if (atomList.size() >= 63) throw std::overflow_error("subalgebra too large to count");
    return 1ull << atomList.size();
  }

  /// x is a member iff x equals the join of the atoms below it.
  bool member(const AlgebraElement& x) const {
    AlgebraElement acc = AlgebraElement::zero();
    for (const auto& a : atomList)
      if (leq(a, x)) acc = join(acc, a);
    return acc == x;
  }

  /// The element with the given atom subset; bit i of mask selects atomList[i].
  AlgebraElement elementByMask(unsigned long long mask) const {
    AlgebraElement acc = AlgebraElement::zero();
    for (size_t i = 0; i < atomList.size(); ++i)
      if (mask >> i & 1) acc = join(acc, atomList[i]);
    return acc;
  }
};

/// Subalgebra generated by the given elements.  The atoms are the distinct
/// nonzero full-length epsilon products of the generator tuple.
FiniteSubalgebra generatedSubalgebra(std::vector<AlgebraElement> generators);

}  // namespace punct
