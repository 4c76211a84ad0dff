#ifndef PL0PLUS_ISA_HPP
#define PL0PLUS_ISA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pl0plus/diagnostics.hpp"

namespace pl0plus {

/// The 11 p+ mnemonics.
enum class Opcode { lit, car, alm, lla, ins, sac, sal, opr, ret, lee, esc };

std::string_view mnemonic(Opcode op);
std::optional<Opcode> opcode_from_mnemonic(std::string_view text);

/// Operands each opcode takes: LIT/INS/SAC/SAL/OPR one, CAR/ALM/LLA two,
/// RET/LEE/ESC none.
int operand_count(Opcode op);

/// Numeric OPR codes. 7 is unassigned.
enum class OperationCode : std::int32_t {
  negate = 1,
  add = 2,
  subtract = 3,
  multiply = 4,
  divide = 5,
  odd = 6,
  equal = 8,
  not_equal = 9,
  less = 10,
  greater_equal = 11,
  greater = 12,
  less_equal = 13,
};

bool is_operation_code(std::int32_t value);
bool is_unary_operation(OperationCode op);

/// The operation's name as it appears in serialized trees (suma, resta,
/// menor_que, ...).
std::string_view operation_name(OperationCode op);
std::optional<OperationCode> operation_from_name(std::string_view name);

/// One p+ instruction. `a` holds the single operand (or dif), `b` the
/// second operand (pos or dir) of the two-operand forms.
struct Instruction {
  Opcode op = Opcode::ret;
  std::int32_t a = 0;
  std::int32_t b = 0;

  static Instruction lit(std::int32_t val) { return {Opcode::lit, val, 0}; }
  static Instruction car(std::int32_t dif, std::int32_t pos) { return {Opcode::car, dif, pos}; }
  static Instruction alm(std::int32_t dif, std::int32_t pos) { return {Opcode::alm, dif, pos}; }
  static Instruction lla(std::int32_t dif, std::int32_t dir) { return {Opcode::lla, dif, dir}; }
  static Instruction ins(std::int32_t num) { return {Opcode::ins, num, 0}; }
  static Instruction sac(std::int32_t dir) { return {Opcode::sac, dir, 0}; }
  static Instruction sal(std::int32_t dir) { return {Opcode::sal, dir, 0}; }
  static Instruction opr(OperationCode code) { return {Opcode::opr, static_cast<std::int32_t>(code), 0}; }
  static Instruction ret() { return {Opcode::ret, 0, 0}; }
  static Instruction lee() { return {Opcode::lee, 0, 0}; }
  static Instruction esc() { return {Opcode::esc, 0, 0}; }

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct ObjectParseResult {
  std::vector<Instruction> code;
  DiagnosticLog log;
};

/// Parses `.p+` object text: one instruction per non-empty line, uppercase
/// mnemonic and decimal operands separated by single spaces. An
/// instruction's address is its 0-based index. Unknown mnemonics, wrong
/// operand counts, invalid OPR codes, jump targets outside [0, n) and
/// INS operands below 3 are load errors naming the line.
ObjectParseResult parse_object_text(std::string_view text);

/// Inverse of parse_object_text; canonical files round-trip byte-exactly.
std::string render_object_text(std::span<const Instruction> code);

/// Shared arithmetic semantics for OPR, used by both the stack machine and
/// the tree-walking interpreter: 32-bit signed values, faults on overflow
/// and on division by zero, division truncates toward zero, relational
/// results are exactly 0 or 1.
enum class ArithFault { none, division_by_zero, overflow };

struct ArithResult {
  std::int32_t value = 0;
  ArithFault fault = ArithFault::none;

  bool ok() const { return fault == ArithFault::none; }
};

ArithResult apply_unary(OperationCode op, std::int32_t operand);
ArithResult apply_binary(OperationCode op, std::int32_t lhs, std::int32_t rhs);

}  // namespace pl0plus

#endif
