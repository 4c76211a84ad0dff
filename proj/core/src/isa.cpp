#include "pl0plus/isa.hpp"

#include <array>
#include <charconv>
#include <cstdint>

namespace pl0plus {

namespace {

constexpr std::array<std::string_view, 11> kMnemonics{
    "LIT", "CAR", "ALM", "LLA", "INS", "SAC", "SAL", "OPR", "RET", "LEE", "ESC",
};

struct OperationInfo {
  OperationCode code;
  std::string_view name;
};

constexpr std::array<OperationInfo, 12> kOperations{{
    {OperationCode::negate, "negativo"},
    {OperationCode::add, "suma"},
    {OperationCode::subtract, "resta"},
    {OperationCode::multiply, "multiplicacion"},
    {OperationCode::divide, "division"},
    {OperationCode::odd, "odd"},
    {OperationCode::equal, "comparacion"},
    {OperationCode::not_equal, "diferente_de"},
    {OperationCode::less, "menor_que"},
    {OperationCode::greater_equal, "mayor_igual_que"},
    {OperationCode::greater, "mayor_que"},
    {OperationCode::less_equal, "menor_igual_que"},
}};

}  // namespace

std::string_view mnemonic(Opcode op) {
  return kMnemonics[static_cast<std::size_t>(op)];
}

std::optional<Opcode> opcode_from_mnemonic(std::string_view text) {
  for (std::size_t i = 0; i < kMnemonics.size(); ++i) {
    if (kMnemonics[i] == text) return static_cast<Opcode>(i);
  }
  return std::nullopt;
}

int operand_count(Opcode op) {
  switch (op) {
    case Opcode::lit:
    case Opcode::ins:
    case Opcode::sac:
    case Opcode::sal:
    case Opcode::opr:
      return 1;
    case Opcode::car:
    case Opcode::alm:
    case Opcode::lla:
      return 2;
    case Opcode::ret:
    case Opcode::lee:
    case Opcode::esc:
      return 0;
  }
  return 0;
}

bool is_operation_code(std::int32_t value) {
  return (value >= 1 && value <= 6) || (value >= 8 && value <= 13);
}

bool is_unary_operation(OperationCode op) {
  return op == OperationCode::negate || op == OperationCode::odd;
}

std::string_view operation_name(OperationCode op) {
  for (const auto& info : kOperations) {
    if (info.code == op) return info.name;
  }
  return "";
}

std::optional<OperationCode> operation_from_name(std::string_view name) {
  for (const auto& info : kOperations) {
    if (info.name == name) return info.code;
  }
  return std::nullopt;
}

ObjectParseResult parse_object_text(std::string_view text) {
  ObjectParseResult result;
  std::vector<int> jump_lines;  // source line per instruction with a dir operand
  int line_no = 0;
  std::size_t start = 0;

  auto load_error = [&](int line, std::string message) {
    result.log.error(Phase::gen, SourcePos{line, 1}, 0, std::move(message));
  };

  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t begin = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > begin) fields.push_back(line.substr(begin, i - begin));
    }

    auto op = opcode_from_mnemonic(fields[0]);
    if (!op) {
      load_error(line_no, "mnemónico desconocido: " + std::string(fields[0]));
      continue;
    }
    if (static_cast<int>(fields.size()) - 1 != operand_count(*op)) {
      load_error(line_no, "número de operandos incorrecto");
      continue;
    }
    Instruction instr;
    instr.op = *op;
    bool operands_ok = true;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      std::int32_t value = 0;
      auto [ptr, ec] =
          std::from_chars(fields[f].data(), fields[f].data() + fields[f].size(), value);
      if (ec != std::errc{} || ptr != fields[f].data() + fields[f].size()) {
        load_error(line_no, "operando inválido: " + std::string(fields[f]));
        operands_ok = false;
        break;
      }
      if (f == 1) instr.a = value;
      else instr.b = value;
    }
    if (!operands_ok) continue;

    switch (instr.op) {
      case Opcode::opr:
        if (!is_operation_code(instr.a)) load_error(line_no, "código de operación inválido");
        break;
      case Opcode::ins:
        if (instr.a < 3) load_error(line_no, "INS requiere un operando mayor o igual a 3");
        break;
      case Opcode::car:
      case Opcode::alm:
        if (instr.a < 0 || instr.b < 0) load_error(line_no, "operando inválido");
        break;
      case Opcode::lla:
        if (instr.a < 0) load_error(line_no, "operando inválido");
        break;
      default:
        break;
    }
    if (instr.op == Opcode::sac || instr.op == Opcode::sal || instr.op == Opcode::lla)
      jump_lines.push_back(line_no);
    else
      jump_lines.push_back(0);
    result.code.push_back(instr);
  }

  // Jump targets are addresses; the full length is known only now.
  auto length = static_cast<std::int32_t>(result.code.size());
  for (std::size_t addr = 0; addr < result.code.size(); ++addr) {
    if (jump_lines[addr] == 0) continue;
    const Instruction& instr = result.code[addr];
    std::int32_t dir = instr.op == Opcode::lla ? instr.b : instr.a;
    if (dir < 0 || dir >= length)
      load_error(jump_lines[addr], "dirección fuera de rango: " + std::to_string(dir));
  }
  return result;
}

std::string render_object_text(std::span<const Instruction> code) {
  std::string out;
  for (const Instruction& instr : code) {
    out += mnemonic(instr.op);
    if (operand_count(instr.op) >= 1) {
      out += ' ';
      out += std::to_string(instr.a);
    }
    if (operand_count(instr.op) == 2) {
      out += ' ';
      out += std::to_string(instr.b);
    }
    out += '\n';
  }
  return out;
}

ArithResult apply_unary(OperationCode op, std::int32_t operand) {
  switch (op) {
    case OperationCode::negate:
      if (operand == INT32_MIN) return {0, ArithFault::overflow};
      return {-operand, ArithFault::none};
    case OperationCode::odd:
      return {operand % 2 != 0 ? 1 : 0, ArithFault::none};
    default:
      return {0, ArithFault::none};
  }
}

ArithResult apply_binary(OperationCode op, std::int32_t lhs, std::int32_t rhs) {
  auto wide = [](std::int64_t v) -> ArithResult {
    if (v < INT32_MIN || v > INT32_MAX) return {0, ArithFault::overflow};
    return {static_cast<std::int32_t>(v), ArithFault::none};
  };
  switch (op) {
    case OperationCode::add:
      return wide(static_cast<std::int64_t>(lhs) + rhs);
    case OperationCode::subtract:
      return wide(static_cast<std::int64_t>(lhs) - rhs);
    case OperationCode::multiply:
      return wide(static_cast<std::int64_t>(lhs) * rhs);
    case OperationCode::divide:
      if (rhs == 0) return {0, ArithFault::division_by_zero};
      if (lhs == INT32_MIN && rhs == -1) return {0, ArithFault::overflow};
      return {lhs / rhs, ArithFault::none};
    case OperationCode::equal:
      return {lhs == rhs ? 1 : 0, ArithFault::none};
    case OperationCode::not_equal:
      return {lhs != rhs ? 1 : 0, ArithFault::none};
    case OperationCode::less:
      return {lhs < rhs ? 1 : 0, ArithFault::none};
    case OperationCode::greater_equal:
      return {lhs >= rhs ? 1 : 0, ArithFault::none};
    case OperationCode::greater:
      return {lhs > rhs ? 1 : 0, ArithFault::none};
    case OperationCode::less_equal:
      return {lhs <= rhs ? 1 : 0, ArithFault::none};
    default:
      return {0, ArithFault::none};
  }
}

}  // namespace pl0plus
