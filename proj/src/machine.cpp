#include "punct/machine.hpp"

#include <cctype>
#include <sstream>

namespace punct {

std::string valueToString(Value v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u) {
    digits += static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  if (neg) digits += '-';
  return {digits.rbegin(), digits.rend()};
}

bool parseValue(const std::string& s, Value& out) {
  if (s.empty()) return false;
  size_t i = 0;
  bool neg = s[0] == '-';
  if (neg) i = 1;
  if (i == s.size()) return false;
  unsigned __int128 u = 0;
  const unsigned __int128 cap = ~static_cast<unsigned __int128>(0) >> 1;  // max positive
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    u = u * 10 + static_cast<unsigned>(s[i] - '0');
    if (u > cap) return false;
  }
  out = neg ? -static_cast<Value>(u) : static_cast<Value>(u);
  return true;
}

namespace {

bool parseRegister(const std::string& t, uint32_t& out) {
  if (t.size() < 2 || t[0] != 'r') return false;
  uint64_t v = 0;
  for (size_t i = 1; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    v = v * 10 + static_cast<uint64_t>(t[i] - '0');
  }
  if (v >= kMaxRegisters) return false;
  out = static_cast<uint32_t>(v);
  return true;
}

Program::Operand parseOperand(const std::string& t, size_t lineNo) {
  Program::Operand o;
  uint32_t r;
  if (parseRegister(t, r)) {
    o.isReg = true;
    o.v = r;
    return o;
  }
  if (parseValue(t, o.v)) return o;
  throw LoadError("line " + std::to_string(lineNo) + ": bad operand '" + t + "'");
}

}  // namespace

Program parseProgram(const std::string& text) {
  Program p;
  std::istringstream in(text);
  std::string line;
  size_t lineNo = 0;
  std::vector<std::pair<std::string, size_t>> raw;  // (stripped line, source line number)
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) raw.emplace_back(line, lineNo);
  }

  size_t start = 0;
  if (!raw.empty()) {
    std::istringstream ls(raw[0].first);
    std::string kw;
    ls >> kw;
    if (kw == "arity") {
      std::string t;
      Value a;
      if (!(ls >> t) || !parseValue(t, a) || a < 0 || a > 8)
        throw LoadError("bad arity declaration");
      p.arity = static_cast<uint32_t>(a);
      start = 1;
    }
  }

  std::vector<uint32_t> repeatStack;
  std::vector<std::vector<uint32_t>> enclosing;  // per instruction, open repeat pcs
  for (size_t i = start; i < raw.size(); ++i) {
    const size_t src = raw[i].second;
    std::istringstream ls(raw[i].first);
    std::string op;
    ls >> op;
    auto fail = [src](const std::string& msg) -> LoadError {
      return LoadError("line " + std::to_string(src) + ": " + msg);
    };
    auto word = [&]() {
      std::string t;
      if (!(ls >> t)) throw fail("missing operand");
      return t;
    };
    Program::Instr ins{};
    if (op == "set") {
      ins.op = Program::Op::Set;
      if (!parseRegister(word(), ins.reg)) throw fail("bad register");
      if (!parseValue(word(), ins.lit)) throw fail("set needs a literal");
    } else if (op == "add") {
      ins.op = Program::Op::Add;
      if (!parseRegister(word(), ins.reg)) throw fail("bad register");
      ins.a = parseOperand(word(), src);
      ins.b = parseOperand(word(), src);
    } else if (op == "if") {
      ins.op = Program::Op::IfGoto;
      if (!parseRegister(word(), ins.reg)) throw fail("bad register");
      if (word() != "goto") throw fail("expected goto");
      Value t;
      if (!parseValue(word(), t) || t < 0) throw fail("bad goto target");
      ins.target = static_cast<uint32_t>(t);
    } else if (op == "repeat") {
      ins.op = Program::Op::Repeat;
      if (!parseValue(word(), ins.lit) || ins.lit < 0)
        throw fail("repeat bound must be a nonnegative literal");
    } else if (op == "end") {
      ins.op = Program::Op::End;
      if (repeatStack.empty()) throw fail("end without repeat");
    } else if (op == "ret") {
      ins.op = Program::Op::Ret;
      if (!parseRegister(word(), ins.reg)) throw fail("bad register");
    } else {
      throw fail("unknown instruction '" + op + "'");
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing tokens");

    uint32_t pc = static_cast<uint32_t>(p.code.size());
    if (ins.op == Program::Op::End) {
      uint32_t open = repeatStack.back();
      repeatStack.pop_back();
      ins.target = open;
      ins.depth = static_cast<uint32_t>(repeatStack.size());
      enclosing.push_back(repeatStack);  // scope outside the block it closes
      p.code.push_back(ins);
      p.code[open].target = pc;
      continue;
    }
    ins.depth = static_cast<uint32_t>(repeatStack.size());
    enclosing.push_back(repeatStack);
    p.code.push_back(ins);
    if (ins.op == Program::Op::Repeat) repeatStack.push_back(pc);
  }
  if (!repeatStack.empty()) throw LoadError("unterminated repeat block");

  // goto targets: forward only, and the target scope must be a prefix of the
  // source scope -- a jump may leave repeat blocks but never enter one
  for (size_t i = 0; i < p.code.size(); ++i) {
    const auto& ins = p.code[i];
    if (ins.op != Program::Op::IfGoto) continue;
    if (ins.target <= i || ins.target > p.code.size())
      throw LoadError("goto target must be a later line");
    std::vector<uint32_t> targetScope;
    if (ins.target < p.code.size()) {
      targetScope = enclosing[ins.target];
      if (p.code[ins.target].op == Program::Op::End)
        targetScope.push_back(p.code[ins.target].target);
    }
    const auto& sourceScope = enclosing[i];
    if (targetScope.size() > sourceScope.size() ||
        !std::equal(targetScope.begin(), targetScope.end(), sourceScope.begin()))
      throw LoadError("goto may not enter a repeat block");
  }
  return p;
}

EvalOutcome evalProgram(const Program& p, std::span<const Value> inputs, uint64_t budget) {
  if (inputs.size() != p.arity)
    throw std::invalid_argument("evalProgram: input arity mismatch");
  EvalOutcome out;
  Value regs[kMaxRegisters] = {};
  for (size_t i = 0; i < inputs.size(); ++i) regs[i] = inputs[i];
  std::vector<std::pair<uint32_t, Value>> loops;  // (repeat pc, remaining)

  auto readOperand = [&](const Program::Operand& o) {
    return o.isReg ? regs[static_cast<uint32_t>(o.v)] : o.v;
  };

  uint32_t pc = 0;
  while (pc < p.code.size()) {
    if (++out.steps > budget) {
      out.outOfFuel = true;
      return out;
    }
    const auto& ins = p.code[pc];
    switch (ins.op) {
      case Program::Op::Set:
        regs[ins.reg] = ins.lit;
        ++pc;
        break;
      case Program::Op::Add:
        regs[ins.reg] = readOperand(ins.a) + readOperand(ins.b);
        ++pc;
        break;
      case Program::Op::IfGoto:
        if (regs[ins.reg] > 0) {
          uint32_t targetFrames = 0;
          if (ins.target < p.code.size()) {
            const auto& t = p.code[ins.target];
            targetFrames = t.depth + (t.op == Program::Op::End ? 1 : 0);
          }
          while (loops.size() > targetFrames) loops.pop_back();
          pc = ins.target;
        } else {
          ++pc;
        }
        break;
      case Program::Op::Repeat:
        if (ins.lit == 0) {
          pc = ins.target + 1;
        } else {
          loops.emplace_back(pc, ins.lit);
          ++pc;
        }
        break;
      case Program::Op::End: {
        auto& [openPc, remaining] = loops.back();
        if (--remaining > 0) {
          pc = openPc + 1;
        } else {
          loops.pop_back();
          ++pc;
        }
        break;
      }
      case Program::Op::Ret:
        out.value = regs[ins.reg];
        return out;
    }
  }
  return out;  // fell off the end: value 0
}

}  // namespace punct
