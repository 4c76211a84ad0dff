#ifndef PL0PLUS_CODEGEN_HPP
#define PL0PLUS_CODEGEN_HPP

#include <vector>

#include "pl0plus/ast.hpp"
#include "pl0plus/diagnostics.hpp"
#include "pl0plus/isa.hpp"

namespace pl0plus {

/// Address map of one generated block:
///   header_address: SAL b   (address 0 for the main block)
///   ...sub-procedure code...
///   entry_address:  INS var_count+3
///   ...body...
///                   RET
struct BlockLayout {
  SymbolCode block_code;
  int var_count = 0;
  std::int32_t entry_address = 0;
  std::int32_t header_address = 0;
  int level = 0;  // nesting depth, main block = 0

  friend bool operator==(const BlockLayout&, const BlockLayout&) = default;
};

struct GenResult {
  std::vector<Instruction> code;
  std::vector<BlockLayout> layouts;
  DiagnosticLog log;
};

/// Translates a fully annotated tree into p+ code. Forward references
/// (block headers, if/while jumps, calls to later procedures) are
/// back-patched in the single pass, so generation is deterministic.
/// Requires an annotated tree with no semantic errors.
GenResult generate(const Program& program);

std::vector<BlockLayout> layout_blocks(const Program& program);

}  // namespace pl0plus

#endif
