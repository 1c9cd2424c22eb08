#include "punct/adversary.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace punct {

std::optional<FuelPolicy> FuelPolicy::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  uint64_t scale = 1000;
  if (colon != std::string::npos) {
    Value v;
    if (!parseValue(text.substr(colon + 1), v) || v <= 0) return std::nullopt;
    scale = static_cast<uint64_t>(v);
  }
  FuelPolicy p;
  p.scale = scale;
  if (kind == "quadratic")
    p.kind = Kind::Quadratic;
  else if (kind == "constant")
    p.kind = Kind::Constant;
  else
    return std::nullopt;
  return p;
}

std::string FuelPolicy::toString() const {
  return (kind == Kind::Quadratic ? std::string("quadratic:") : std::string("constant:")) +
         std::to_string(scale);
}

namespace {

class DslAdversary final : public Adversary {
 public:
  DslAdversary(Program p, std::string name) : program_(std::move(p)), name_(std::move(name)) {}
  uint32_t arity() const override { return program_.arity; }
  EvalOutcome eval(std::span<const Value> inputs, uint64_t budget) const override {
    return evalProgram(program_, inputs, budget);
  }
  const std::string& name() const override { return name_; }

 private:
  Program program_;
  std::string name_;
};

}  // namespace

std::unique_ptr<Adversary> loadAdversary(const std::string& fileText,
                                         const std::string& displayName) {
  std::istringstream in(fileText);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string first;
    if (!(probe >> first)) continue;
    if (first == "builtin") {
      std::string spec;
      std::getline(probe, spec);
      return makeBuiltinAdversary(spec);
    }
    break;  // a DSL instruction line
  }
  return std::make_unique<DslAdversary>(parseProgram(fileText), displayName);
}

std::variant<PosetApprox, NotTotalReport> posetApproximation(const Adversary& adv,
                                                             uint32_t sPrime, uint64_t budget) {
  ApproxCache cache(adv);
  return cache.at(sPrime, budget);
}

std::variant<PosetApprox, NotTotalReport> ApproxCache::at(uint32_t sPrime, uint64_t budget) {
  if (failed_) return failure_;
  if (sPrime <= cached_.domainSize) {
    PosetApprox view;
    view.domainSize = sPrime;
    view.table.resize(size_t(sPrime) * sPrime);
    for (uint32_t x = 0; x < sPrime; ++x)
      for (uint32_t y = 0; y < sPrime; ++y)
        view.table[size_t(x) * sPrime + y] = cached_.leq(x, y);
    return view;
  }
  PosetApprox next;
  next.domainSize = sPrime;
  next.table.assign(size_t(sPrime) * sPrime, 0);
  for (uint32_t x = 0; x < sPrime; ++x)
    for (uint32_t y = 0; y < sPrime; ++y) {
      if (x < cached_.domainSize && y < cached_.domainSize) {
        next.table[size_t(x) * sPrime + y] = cached_.leq(x, y);
        continue;
      }
      Value in[2] = {x, y};
      EvalOutcome out = adv_.eval(std::span<const Value>(in, 2), budget);
      steps_ += out.steps;
      if (out.outOfFuel) {
        failed_ = true;
        failure_ = {x, y};
        return failure_;
      }
      next.table[size_t(x) * sPrime + y] = out.value == 1 ? 1 : 0;
    }
  cached_ = std::move(next);
  return cached_;
}

Value ModalView::query(Value op, Value x, Value y) {
  Value in[3] = {op, x, y};
  EvalOutcome out = adv_.eval(std::span<const Value>(in, 3), budget_);
  ++queries_;
  steps_ += out.steps;
  if (out.outOfFuel) {
    exhausted_ = true;
    return -1;
  }
  return out.value;
}

std::vector<Value> ModalView::probeSet(uint64_t stage) {
  std::set<Value> s{zero(), one(), top0(), top1()};
  for (uint64_t x = 0; x <= stage; ++x) s.insert(static_cast<Value>(x));
  return {s.begin(), s.end()};
}

std::vector<Value> ModalView::productClosure(const std::vector<Value>& s, size_t cap) {
  std::set<Value> values{one()};
  for (Value a : s) {
    if (exhausted()) break;
    std::set<Value> next;
    Value ca = opComp(a);
    for (Value e : values) {
      next.insert(opMeet(e, a));
      next.insert(opMeet(e, ca));
      if (next.size() > cap) {
        exhausted_ = true;
        break;
      }
    }
    if (exhausted()) break;
    values = std::move(next);
  }
  return {values.begin(), values.end()};
}

Value SuccView::query(Value op, Value x) {
  Value in[2] = {op, x};
  EvalOutcome out = adv_.eval(std::span<const Value>(in, 2), budget_);
  if (out.outOfFuel) {
    exhausted_ = true;
    return -1;
  }
  return out.value;
}

}  // namespace punct
