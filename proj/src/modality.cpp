#include "punct/modality.hpp"

#include <map>
#include <stdexcept>

namespace punct {

bool isPrime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint32_t> distinctPrimeFactors(unsigned long long n) {
  std::vector<uint32_t> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<uint32_t>(n));
  return out;
}

std::vector<AtomRef> ModalityTable::cycleAtoms(const CycleRecord& c) const {
  std::vector<AtomRef> out;
  for (uint32_t m = 0; m < c.uCount; ++m) {
    out.push_back({0, c.uStart + m});
    if (m < c.vCount) out.push_back({1, c.vStart + m});
  }
  return out;
}

ModalityTable addPCycle(const ModalityTable& table, uint32_t p) {
  if (p == 2 || !isPrime(p)) throw std::invalid_argument("addPCycle: p must be an odd prime");
  if (table.hasCycleFor(p)) throw std::invalid_argument("addPCycle: duplicate p-cycle");

  ModalityTable out = table;
  const uint32_t i = out.nextU();
  const uint32_t j = out.nextV();
  const uint32_t k = p / 2;
  out.gU.resize(i + k + 1);
  out.gV.resize(j + k);
  for (uint32_t m = 0; m < k; ++m) {
    out.gU[i + m] = AlgebraElement::atomV(j + m);
    out.gV[j + m] = AlgebraElement::atomU(i + m + 1);
  }
  out.gU[i + k] = AlgebraElement::atomU(i);
  out.cycles.push_back({p, i, k + 1, j, k});
  return out;
}

std::variant<AlgebraElement, DeferError> applyModality(const ModalityTable& table,
                                                       const AlgebraElement& x) {
  if (x.isZero()) return AlgebraElement::zero();
  if (!inFrechet(x)) return AlgebraElement::one();
  AlgebraElement acc = AlgebraElement::zero();
  for (AtomRef a : atomsBelow(x)) {
    if (!table.defined(a)) return DeferError{a};
    acc = join(acc, table.image(a));
  }
  return acc;
}

OrbitResult forwardOrbit(const ModalityTable& table, const AlgebraElement& a,
                         unsigned long long cutoff) {
  OrbitResult out;
  std::map<AlgebraElement, size_t> seen;
  AlgebraElement cur = a;
  for (unsigned long long step = 0; step <= cutoff; ++step) {
    auto it = seen.find(cur);
    if (it != seen.end()) {
      out.closed = true;
      return out;
    }
    seen.emplace(cur, out.elements.size());
    out.elements.push_back(cur);
    auto next = applyModality(table, cur);
    if (auto* d = std::get_if<DeferError>(&next)) {
      out.defer = *d;
      return out;
    }
    cur = std::get<AlgebraElement>(std::move(next));
  }
  return out;  // truncated
}

unsigned long long defaultOrbitCutoff(const ModalityTable& table, unsigned long long cap) {
  unsigned long long prod = 1;
  for (const auto& c : table.cycles) {
    if (prod > cap / c.prime) return cap;
    prod *= c.prime;
  }
  return std::min(prod + 1, cap);
}

OrbitClass classifyOrbit(const ModalityTable& table, const AlgebraElement& a,
                         unsigned long long cutoff) {
  if (a.isZero()) throw std::invalid_argument("classifyOrbit: a must be nonzero");
  if (cutoff == 0) cutoff = defaultOrbitCutoff(table);
  if (!inFrechet(a)) return OrbitNonFrechet{};
  auto fa = applyModality(table, a);
  if (auto* d = std::get_if<DeferError>(&fa)) return *d;
  if (std::get<AlgebraElement>(fa) == a) return OrbitFixed{};
  OrbitResult orbit = forwardOrbit(table, a, cutoff);
  if (orbit.defer) return *orbit.defer;
  if (!orbit.closed) return OrbitIndeterminate{};
  OrbitCycle c;
  c.card = orbit.card();
  c.primeFactors = distinctPrimeFactors(c.card);
  return c;
}

std::string cycleTraceLine(const CycleRecord& c) {
  const uint32_t k = c.prime / 2;
  std::string out = "cycle p=" + std::to_string(c.prime);
  out += " u=" + std::to_string(c.uStart) + ".." + std::to_string(c.uStart + k);
  out += " v=" + std::to_string(c.vStart) + ".." +
         std::to_string(c.vStart + (k == 0 ? 0 : k - 1));
  return out;
}

}  // namespace punct
