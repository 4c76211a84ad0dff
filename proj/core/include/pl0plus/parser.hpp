#ifndef PL0PLUS_PARSER_HPP
#define PL0PLUS_PARSER_HPP

#include <span>
#include <vector>

#include "pl0plus/ast.hpp"
#include "pl0plus/diagnostics.hpp"
#include "pl0plus/token.hpp"

namespace pl0plus {

struct ParseResult {
  Program program;
  DiagnosticLog log;
};

/// Recursive-descent parser for pl0+ (PL/0 plus else/read/write).
///
/// Total: always yields a structurally complete tree. Grammar violations
/// are reported through the log (one per line and phase) and repaired by
/// panic-mode recovery: skip to a synchronization token and insert
/// Empty statements or 0 literals where constructs are missing.
ParseResult parse(std::span<const Token> tokens);

}  // namespace pl0plus

#endif
