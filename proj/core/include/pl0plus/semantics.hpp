#ifndef PL0PLUS_SEMANTICS_HPP
#define PL0PLUS_SEMANTICS_HPP

#include <vector>

#include "pl0plus/ast.hpp"
#include "pl0plus/diagnostics.hpp"
#include "pl0plus/symbols.hpp"

namespace pl0plus {

struct AnalysisResult {
  DiagnosticLog log;
  std::vector<SymbolEntry> symbols;  // every declaration, in visit order
  SymbolCode main_block_code;
};

/// Annotates the tree in place: assigns a SymbolCode to every declaration
/// and resolves every identifier reference, enforcing the pl0+ rules
/// (unique codes, no duplicate names per scope, procedures are not values,
/// constants are not assignment/read targets, every reference resolves).
/// Violations become sem-phase errors at the offending identifier; analysis
/// continues with the reference left unannotated. Variables that are never
/// referenced are reported as warnings.
AnalysisResult analyze(Program& program);

}  // namespace pl0plus

#endif
