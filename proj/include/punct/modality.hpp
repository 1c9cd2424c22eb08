#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "punct/algebra.hpp"

namespace punct {

/// One installed p-cycle: u indices [uStart, uStart+uCount) and v indices
/// [vStart, vStart+vCount), with uCount = k+1, vCount = k, k = floor(p/2).
struct CycleRecord {
  uint32_t prime = 0;
  uint32_t uStart = 0, uCount = 0;
  uint32_t vStart = 0, vCount = 0;

  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

/// The partial map g on atoms plus the list of installed cycles.  Values are
/// immutable; addPCycle returns an extended copy.
struct ModalityTable {
  std::vector<std::optional<AlgebraElement>> gU;  // image of u_i
  std::vector<std::optional<AlgebraElement>> gV;  // image of v_i
  std::vector<CycleRecord> cycles;

  uint32_t nextU() const { return static_cast<uint32_t>(gU.size()); }
  uint32_t nextV() const { return static_cast<uint32_t>(gV.size()); }

  bool defined(AtomRef a) const {
    const auto& g = a.side == 0 ? gU : gV;
    return a.index < g.size() && g[a.index].has_value();
  }
  const AlgebraElement& image(AtomRef a) const { return *(a.side == 0 ? gU : gV)[a.index]; }

  bool hasCycleFor(uint32_t prime) const {
    for (const auto& c : cycles)
      if (c.prime == prime) return true;
    return false;
  }

  /// Atoms of the given cycle in construction order: u_i, v_j, u_{i+1}, ...
  std::vector<AtomRef> cycleAtoms(const CycleRecord& c) const;
};

/// Extends g with a p-cycle on the least unused indices.  Throws
/// std::invalid_argument unless p is an odd prime with no cycle yet.
ModalityTable addPCycle(const ModalityTable& table, uint32_t p);

/// applyModality could not be evaluated: g is not yet defined on this atom.
struct DeferError {
  AtomRef atom;
};

/// F_[g]: 0 -> 0, Frechet x -> join of g over the atoms below x,
/// non-Frechet x -> 1.
std::variant<AlgebraElement, DeferError> applyModality(const ModalityTable& table,
                                                       const AlgebraElement& x);

struct OrbitResult {
  std::vector<AlgebraElement> elements;  // distinct iterates in order, starting at a
  bool closed = false;                   // repetition found before the cutoff
  std::optional<DeferError> defer;

  size_t card() const { return elements.size(); }
};

/// Iterates F_[g] on `a` until a repetition (closed) or the cutoff (truncated).
OrbitResult forwardOrbit(const ModalityTable& table, const AlgebraElement& a,
                         unsigned long long cutoff);

/// 1 + product of installed primes, the bound under which all in-scope orbits
/// close; saturates at the cap.
unsigned long long defaultOrbitCutoff(const ModalityTable& table,
                                      unsigned long long cap = 1u << 20);

struct OrbitNonFrechet {};                    // case 1: F(a) = 1
struct OrbitFixed {};                         // case 2: F(a) = a
struct OrbitCycle {                           // case 3
  unsigned long long card = 0;
  std::vector<uint32_t> primeFactors;
};
struct OrbitIndeterminate {};                 // truncated before closing

using OrbitClass =
    std::variant<OrbitNonFrechet, OrbitFixed, OrbitCycle, OrbitIndeterminate, DeferError>;

/// Classifies a nonzero element per the three orbit cases.  Never guesses: a
/// truncated orbit reports OrbitIndeterminate.
OrbitClass classifyOrbit(const ModalityTable& table, const AlgebraElement& a,
                         unsigned long long cutoff = 0);

std::vector<uint32_t> distinctPrimeFactors(unsigned long long n);
bool isPrime(unsigned long long n);

/// Trace line `cycle p=<p> u=<i..i+k> v=<j..j+k-1>`, bit-exact.
std::string cycleTraceLine(const CycleRecord& c);

}  // namespace punct
