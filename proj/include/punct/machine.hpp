#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace punct {

/// Wide value type for adversary ids and register contents.
using Value = __int128;

std::string valueToString(Value v);
bool parseValue(const std::string& s, Value& out);

struct LoadError : std::runtime_error {
  explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

/// Register machine with bounded loops only.  One instruction per line:
///   set r v       -- r := literal
///   add r a b     -- r := a + b, operands registers or literals
///   if r goto L   -- jump to absolute line L (forward only) when r > 0
///   repeat k      -- run the block up to the matching `end` k times
///   end
///   ret r
/// Loop bounds must be literals; goto targets must be forward and may only
/// leave blocks, never enter them.  Totality follows.
struct Program {
  enum class Op : uint8_t { Set, Add, IfGoto, Repeat, End, Ret };
  struct Operand {
    bool isReg = false;
    Value v = 0;  // register index or literal
  };
  struct Instr {
    Op op;
    uint32_t reg = 0;     // target register for set/add, tested for if, returned for ret
    Operand a, b;         // add operands
    uint32_t target = 0;  // if target line, or matching end/repeat partner
    Value lit = 0;        // set literal / repeat bound
    uint32_t depth = 0;   // static nesting depth
  };
  std::vector<Instr> code;
  uint32_t arity = 2;
};

inline constexpr uint32_t kMaxRegisters = 64;

/// Parses a DSL program; throws LoadError naming the offending line.
Program parseProgram(const std::string& text);

struct EvalOutcome {
  bool outOfFuel = false;
  Value value = 0;
  uint64_t steps = 0;
};

/// Runs the program on the inputs (loaded into r0..) within the step budget.
/// Deterministic: a terminated run returns the same value under any larger
/// budget.
EvalOutcome evalProgram(const Program& p, std::span<const Value> inputs, uint64_t budget);

}  // namespace punct
