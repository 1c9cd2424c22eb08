#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "punct/machine.hpp"

namespace punct {

/// Per-stage step budget for adversary evaluations.
struct FuelPolicy {
  enum class Kind { Quadratic, Constant };
  Kind kind = Kind::Quadratic;
  uint64_t scale = 1000;

  uint64_t budgetAt(uint64_t stage) const {
    return kind == Kind::Quadratic ? scale * (stage + 1) * (stage + 1) : scale;
  }
  static std::optional<FuelPolicy> parse(const std::string& text);
  std::string toString() const;
};

/// A total deterministic program standing in for a punctual adversary.  DSL
/// programs and builtin scripted adversaries share this interface; builtins
/// charge their internal work against the same budget.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual uint32_t arity() const = 0;
  virtual EvalOutcome eval(std::span<const Value> inputs, uint64_t budget) const = 0;
  virtual const std::string& name() const = 0;
};

/// Loads either a DSL program or a `builtin <name> key=value...` declaration.
std::unique_ptr<Adversary> loadAdversary(const std::string& fileText,
                                         const std::string& displayName);
std::unique_ptr<Adversary> makeBuiltinAdversary(const std::string& spec);

// --- binary poset adversaries -----------------------------------------------

/// Fully evaluated s' x s' table of phi_i over {0..s'-1}.
struct PosetApprox {
  uint32_t domainSize = 0;
  std::vector<uint8_t> table;  // row-major, x * domainSize + y

  bool leq(uint32_t x, uint32_t y) const { return table[size_t(x) * domainSize + y] != 0; }
};

struct NotTotalReport {
  uint32_t x = 0, y = 0;  // first cell that ran out of fuel
};

/// Extends a cached table to horizon sPrime; each cell evaluated within
/// `budget` steps.  The relation on common cells never changes, so tables
/// extend monotonically.
class ApproxCache {
 public:
  explicit ApproxCache(const Adversary& adv) : adv_(adv) {}
  std::variant<PosetApprox, NotTotalReport> at(uint32_t sPrime, uint64_t budget);
  uint64_t stepsCharged() const { return steps_; }

 private:
  const Adversary& adv_;
  PosetApprox cached_;
  bool failed_ = false;
  NotTotalReport failure_;
  uint64_t steps_ = 0;
};

std::variant<PosetApprox, NotTotalReport> posetApproximation(const Adversary& adv,
                                                             uint32_t sPrime, uint64_t budget);

// --- modal-signature adversaries --------------------------------------------

/// Query layer over an adversary exposing the modal-algebra signature through
/// op codes: 0 union, 1 meet, 2 complement, 3 zero, 4 one, 5 f, 6 top0,
/// 7 top1.
class ModalView {
 public:
  ModalView(const Adversary& adv, uint64_t budget) : adv_(adv), budget_(budget) {}

  Value opUnion(Value x, Value y) { return query(0, x, y); }
  Value opMeet(Value x, Value y) { return query(1, x, y); }
  Value opComp(Value x) { return query(2, x, 0); }
  Value zero() { return query(3, 0, 0); }
  Value one() { return query(4, 0, 0); }
  Value opF(Value x) { return query(5, x, 0); }
  Value top0() { return query(6, 0, 0); }
  Value top1() { return query(7, 0, 0); }
  bool opLeq(Value x, Value y) { return opUnion(x, y) == y; }

  bool exhausted() const { return exhausted_; }
  uint64_t queriesIssued() const { return queries_; }
  uint64_t stepsCharged() const { return steps_; }

  /// S_{e,s}: the four constants plus all ids <= s, deduplicated, ascending.
  std::vector<Value> probeSet(uint64_t stage);

  /// X_{e,s}: the values of all epsilon products over S, computed by folding
  /// one element at a time with value dedup; capped.
  std::vector<Value> productClosure(const std::vector<Value>& s, size_t cap = 4096);

 private:
  Value query(Value op, Value x, Value y);
  const Adversary& adv_;
  uint64_t budget_;
  bool exhausted_ = false;
  uint64_t queries_ = 0;
  uint64_t steps_ = 0;
};

// --- successor-signature adversaries ----------------------------------------

/// Op codes: 0 s1(x), 1 s2(x), 2 empty, 3 root.
class SuccView {
 public:
  SuccView(const Adversary& adv, uint64_t budget) : adv_(adv), budget_(budget) {}
  Value s1(Value x) { return query(0, x); }
  Value s2(Value x) { return query(1, x); }
  Value emptyNode() { return query(2, 0); }
  Value rootNode() { return query(3, 0); }
  bool exhausted() const { return exhausted_; }

 private:
  Value query(Value op, Value x);
  const Adversary& adv_;
  uint64_t budget_;
  bool exhausted_ = false;
};

}  // namespace punct
