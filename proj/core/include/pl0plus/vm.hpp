#ifndef PL0PLUS_VM_HPP
#define PL0PLUS_VM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pl0plus/isa.hpp"

namespace pl0plus {

/// Integer I/O endpoints of the machine. read_int returns nullopt when the
/// input is exhausted (a runtime fault for LEE).
struct IoPorts {
  std::function<std::optional<std::int32_t>()> read_int;
  std::function<void(std::int32_t)> write_int;
};

/// Collects output into a vector and serves input from one; handy for tests
/// and for the tree-walking interpreter comparison.
struct VectorIo {
  std::vector<std::int32_t> input;
  std::size_t next = 0;
  std::vector<std::int32_t> output;

  IoPorts ports();
};

enum class RunExit { halted, faulted, limit };

/// The p+ stack machine. The stack is 1-based and growable; every frame
/// starts with three link cells (static link, dynamic link, return address)
/// and its variables from offset 3.
struct MachineState {
  std::vector<Instruction> code;
  std::vector<std::int32_t> stack;  // index 0 unused
  std::int32_t p = 0;               // program counter
  std::int32_t b = 0;               // frame base
  std::int32_t t = 0;               // top of stack
  std::int64_t steps = 0;
  bool faulted = false;
  std::string fault_message;
  std::int32_t fault_address = 0;

  bool halted() const {
    return p == static_cast<std::int32_t>(code.size());
  }
  bool running() const { return !halted() && !faulted; }
};

/// Initial state: p=0 and a synthetic bottom frame at b=1 whose return
/// address is the code length, so the main block's final RET halts the
/// machine. An empty program loads already halted.
MachineState load(std::vector<Instruction> code);

/// Frame base reached by following `dif` static links from the current
/// frame. Faults (and returns nullopt) when the chain breaks or dif
/// exceeds the static depth.
std::optional<std::int32_t> base(MachineState& state, std::int32_t dif);

/// Executes exactly one instruction. Must not be called on a halted or
/// faulted machine. Runtime faults (division by zero, 32-bit overflow,
/// stack index out of bounds, broken static chain, exhausted input) record
/// the faulting address and stop the machine.
void step(MachineState& state, const IoPorts& io);

RunExit run(MachineState& state, const IoPorts& io, std::int64_t step_limit);

}  // namespace pl0plus

#endif
