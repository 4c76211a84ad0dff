#ifndef PL0PLUS_AST_INTERP_HPP
#define PL0PLUS_AST_INTERP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pl0plus/ast.hpp"
#include "pl0plus/vm.hpp"

namespace pl0plus {

struct InterpResult {
  std::vector<std::int32_t> output;
  RunExit exit = RunExit::halted;
  std::string fault_message;
};

/// Direct interpreter over an annotated tree, independent of the code
/// generator and the stack machine. Evaluation order and arithmetic match
/// the machine exactly (operands left to right, shared OPR semantics,
/// zero-initialized variables), so compiled and interpreted runs of the
/// same program can be compared output for output.
InterpResult interpret(const Program& program,
                       std::span<const std::int32_t> input,
                       std::int64_t step_limit);

}  // namespace pl0plus

#endif
