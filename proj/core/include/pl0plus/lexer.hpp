#ifndef PL0PLUS_LEXER_HPP
#define PL0PLUS_LEXER_HPP

#include <string_view>
#include <vector>

#include "pl0plus/diagnostics.hpp"
#include "pl0plus/token.hpp"

namespace pl0plus {

struct LexResult {
  std::vector<Token> tokens;
  DiagnosticLog log;
};

/// Scans pl0+ source text into its token sequence.
///
/// Keywords are lowercase only; identifiers are [A-Za-z_][A-Za-z0-9_]*;
/// numbers are maximal digit runs clamped to INT32_MAX (with a lex error)
/// on overflow. Two-character symbols (:=, <>, <=, >=) win over their
/// one-character prefixes. Unrecognized characters are reported and
/// skipped. Positions are 1-based; a tab advances the column by one.
LexResult tokenize(std::string_view source);

}  // namespace pl0plus

#endif
