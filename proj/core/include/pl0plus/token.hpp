#ifndef PL0PLUS_TOKEN_HPP
#define PL0PLUS_TOKEN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pl0plus/diagnostics.hpp"

namespace pl0plus {

/// The 32 lexical element kinds of pl0+: 14 keywords, 16 symbols,
/// identifiers and numbers.
enum class TokenKind {
  // keywords
  kw_begin,
  kw_call,
  kw_const,
  kw_do,
  kw_end,
  kw_if,
  kw_odd,
  kw_procedure,
  kw_then,
  kw_var,
  kw_while,
  kw_else,
  kw_write,
  kw_read,
  // symbols
  equal,          // =
  assign,         // :=
  comma,          // ,
  semicolon,      // ;
  lparen,         // (
  rparen,         // )
  not_equal,      // <>
  less,           // <
  greater,        // >
  less_equal,     // <=
  greater_equal,  // >=
  plus,           // +
  minus,          // -
  star,           // *
  slash,          // /
  period,         // .
  // valued
  identifier,
  number,
};

/// The XML tag for a token kind: keywords in uppercase (WHILE), symbols by
/// their table name (asignacion, punto_y_coma, ...), IDENTIFICADOR, NUMERO.
std::string_view token_tag(TokenKind kind);

std::optional<TokenKind> token_kind_from_tag(std::string_view tag);

/// Source spelling of a fixed-lexeme kind ("while", ":=", ...). Empty for
/// identifier/number.
std::string_view token_lexeme(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::period;
  SourcePos pos;
  int length = 0;
  std::string name;          // identifier only
  std::int32_t value = 0;    // number only

  friend bool operator==(const Token&, const Token&) = default;
};

}  // namespace pl0plus

#endif
