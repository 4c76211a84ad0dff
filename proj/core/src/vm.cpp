#include "pl0plus/vm.hpp"

namespace pl0plus {

namespace {

// Machines are tiny; the cap only guards against runaway INS operands.
constexpr std::int32_t kStackCellLimit = 1 << 22;

}  // namespace

IoPorts VectorIo::ports() {
  return IoPorts{
      [this]() -> std::optional<std::int32_t> {
        if (next >= input.size()) return std::nullopt;
        return input[next++];
      },
      [this](std::int32_t value) { output.push_back(value); },
  };
}

MachineState load(std::vector<Instruction> code) {
  MachineState state;
  state.code = std::move(code);
  state.stack.assign(4, 0);
  state.stack[3] = static_cast<std::int32_t>(state.code.size());
  state.p = 0;
  state.b = 1;
  state.t = 3;
  return state;
}

namespace {

struct Machine {
  MachineState& s;
  std::int32_t at;  // address of the executing instruction

  bool fault(std::string message) {
    s.faulted = true;
    s.fault_message = std::move(message);
    s.fault_address = at;
    return false;
  }

  // Indices arrive as int64 so frame+pos sums cannot wrap before the check.
  bool grow_to(std::int64_t index) {
    if (index >= kStackCellLimit) return fault("pila fuera de límites");
    if (index >= static_cast<std::int64_t>(s.stack.size()))
      s.stack.resize(static_cast<std::size_t>(index) + 1, 0);
    return true;
  }

  bool read(std::int64_t index, std::int32_t& out) {
    if (index < 1 || index > s.t) return fault("pila fuera de límites");
    out = s.stack[static_cast<std::size_t>(index)];
    return true;
  }

  bool write(std::int64_t index, std::int32_t value) {
    if (index < 1 || index > s.t) return fault("pila fuera de límites");
    s.stack[static_cast<std::size_t>(index)] = value;
    return true;
  }

  bool push(std::int32_t value) {
    if (!grow_to(s.t + 1)) return false;
    s.stack[static_cast<std::size_t>(++s.t)] = value;
    return true;
  }

  bool pop(std::int32_t& out) {
    if (!read(s.t, out)) return false;
    --s.t;
    return true;
  }

  bool jump(std::int32_t dir) {
    if (dir < 0 || dir > static_cast<std::int32_t>(s.code.size()))
      return fault("dirección inválida: " + std::to_string(dir));
    s.p = dir;
    return true;
  }

  bool arith(const ArithResult& r) {
    if (r.fault == ArithFault::division_by_zero) return fault("división por cero");
    if (r.fault == ArithFault::overflow) return fault("desbordamiento aritmético");
    return push(r.value);
  }
};

}  // namespace

std::optional<std::int32_t> base(MachineState& state, std::int32_t dif) {
  std::int32_t frame = state.b;
  while (dif > 0) {
    if (frame < 1 || frame > state.t) {
      state.faulted = true;
      state.fault_message = "cadena estática rota";
      return std::nullopt;
    }
    frame = state.stack[static_cast<std::size_t>(frame)];
    --dif;
  }
  if (frame < 1) {
    state.faulted = true;
    state.fault_message = "cadena estática rota";
    return std::nullopt;
  }
  return frame;
}

void step(MachineState& state, const IoPorts& io) {
  if (!state.running()) return;
  std::int32_t at = state.p;
  const Instruction instr = state.code[static_cast<std::size_t>(at)];
  ++state.p;
  ++state.steps;
  Machine m{state, at};

  auto frame_base = [&](std::int32_t dif, std::int32_t& out) {
    auto result = base(state, dif);
    if (!result) {
      state.fault_address = at;
      return false;
    }
    out = *result;
    return true;
  };

  switch (instr.op) {
    case Opcode::lit:
      m.push(instr.a);
      break;
    case Opcode::car: {
      std::int32_t frame = 0;
      std::int32_t value = 0;
      if (frame_base(instr.a, frame) &&
          m.read(static_cast<std::int64_t>(frame) + instr.b, value))
        m.push(value);
      break;
    }
    case Opcode::alm: {
      std::int32_t frame = 0;
      std::int32_t value = 0;
      if (frame_base(instr.a, frame) && m.pop(value))
        m.write(static_cast<std::int64_t>(frame) + instr.b, value);
      break;
    }
    case Opcode::lla: {
      std::int32_t frame = 0;
      if (!frame_base(instr.a, frame)) break;
      if (!m.grow_to(state.t + 3)) break;
      state.stack[static_cast<std::size_t>(state.t) + 1] = frame;
      state.stack[static_cast<std::size_t>(state.t) + 2] = state.b;
      state.stack[static_cast<std::size_t>(state.t) + 3] = state.p;
      state.b = state.t + 1;
      m.jump(instr.b);
      break;
    }
    case Opcode::ins: {
      std::int64_t top = static_cast<std::int64_t>(state.b) + instr.a - 1;
      if (!m.grow_to(top)) break;
      // Variables start zeroed so runs are reproducible.
      for (std::int64_t i = state.b + 3; i <= top; ++i)
        state.stack[static_cast<std::size_t>(i)] = 0;
      state.t = static_cast<std::int32_t>(top);
      break;
    }
    case Opcode::sac: {
      std::int32_t value = 0;
      if (m.pop(value) && value == 0) m.jump(instr.a);
      break;
    }
    case Opcode::sal:
      m.jump(instr.a);
      break;
    case Opcode::opr: {
      if (!is_operation_code(instr.a)) {
        m.fault("código de operación inválido");
        break;
      }
      auto op = static_cast<OperationCode>(instr.a);
      if (is_unary_operation(op)) {
        std::int32_t operand = 0;
        if (m.pop(operand)) m.arith(apply_unary(op, operand));
      } else {
        std::int32_t rhs = 0;
        std::int32_t lhs = 0;
        if (m.pop(rhs) && m.pop(lhs)) m.arith(apply_binary(op, lhs, rhs));
      }
      break;
    }
    case Opcode::ret: {
      std::int32_t return_address = 0;
      std::int32_t dynamic_link = 0;
      if (!m.read(state.b + 2, return_address) || !m.read(state.b + 1, dynamic_link))
        break;
      state.t = state.b - 1;
      state.b = dynamic_link;
      m.jump(return_address);
      break;
    }
    case Opcode::lee: {
      auto value = io.read_int();
      if (!value) {
        m.fault("entrada agotada");
        break;
      }
      m.push(*value);
      break;
    }
    case Opcode::esc: {
      std::int32_t value = 0;
      if (m.pop(value)) io.write_int(value);
      break;
    }
  }
}

RunExit run(MachineState& state, const IoPorts& io, std::int64_t step_limit) {
  while (state.running() && state.steps < step_limit) step(state, io);
  if (state.faulted) return RunExit::faulted;
  if (state.halted()) return RunExit::halted;
  return RunExit::limit;
}

}  // namespace pl0plus
