#include "pl0plus/lexer.hpp"

#include <array>
#include <cctype>
#include <cstdint>

namespace pl0plus {

namespace {

struct KindInfo {
  TokenKind kind;
  std::string_view tag;
  std::string_view lexeme;
};

constexpr std::array<KindInfo, 32> kKinds{{
    {TokenKind::kw_begin, "BEGIN", "begin"},
    {TokenKind::kw_call, "CALL", "call"},
    {TokenKind::kw_const, "CONST", "const"},
    {TokenKind::kw_do, "DO", "do"},
    {TokenKind::kw_end, "END", "end"},
    {TokenKind::kw_if, "IF", "if"},
    {TokenKind::kw_odd, "ODD", "odd"},
    {TokenKind::kw_procedure, "PROCEDURE", "procedure"},
    {TokenKind::kw_then, "THEN", "then"},
    {TokenKind::kw_var, "VAR", "var"},
    {TokenKind::kw_while, "WHILE", "while"},
    {TokenKind::kw_else, "ELSE", "else"},
    {TokenKind::kw_write, "WRITE", "write"},
    {TokenKind::kw_read, "READ", "read"},
    {TokenKind::equal, "igual", "="},
    {TokenKind::assign, "asignacion", ":="},
    {TokenKind::comma, "coma", ","},
    {TokenKind::semicolon, "punto_y_coma", ";"},
    {TokenKind::lparen, "parentesis_apertura", "("},
    {TokenKind::rparen, "parentesis_cierre", ")"},
    {TokenKind::not_equal, "diferente", "<>"},
    {TokenKind::less, "menor_que", "<"},
    {TokenKind::greater, "mayor_que", ">"},
    {TokenKind::less_equal, "menor_igual", "<="},
    {TokenKind::greater_equal, "mayor_igual", ">="},
    {TokenKind::plus, "mas", "+"},
    {TokenKind::minus, "menos", "-"},
    {TokenKind::star, "por", "*"},
    {TokenKind::slash, "entre", "/"},
    {TokenKind::period, "punto", "."},
    {TokenKind::identifier, "IDENTIFICADOR", ""},
    {TokenKind::number, "NUMERO", ""},
}};

const KindInfo& info_for(TokenKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info;
  }
  return kKinds.back();
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

}  // namespace

std::string_view token_tag(TokenKind kind) { return info_for(kind).tag; }

std::string_view token_lexeme(TokenKind kind) { return info_for(kind).lexeme; }

std::optional<TokenKind> token_kind_from_tag(std::string_view tag) {
  for (const auto& info : kKinds) {
    if (info.tag == tag) return info.kind;
  }
  return std::nullopt;
}

LexResult tokenize(std::string_view source) {
  LexResult result;
  std::size_t i = 0;
  int line = 1;
  int column = 1;

  auto push = [&](TokenKind kind, SourcePos pos, int length) {
    Token t;
    t.kind = kind;
    t.pos = pos;
    t.length = length;
    result.tokens.push_back(std::move(t));
  };

  while (i < source.size()) {
    char c = source[i];
    if (c == '\n') {
      ++i;
      ++line;
      column = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
      ++i;
      ++column;
      continue;
    }
    SourcePos pos{line, column};
    if (ident_start(c)) {
      std::size_t start = i;
      while (i < source.size() && ident_char(source[i])) ++i;
      std::string_view word = source.substr(start, i - start);
      int length = static_cast<int>(word.size());
      column += length;
      bool keyword = false;
      for (const auto& info : kKinds) {
        if (!info.lexeme.empty() && info.lexeme == word) {
          push(info.kind, pos, length);
          keyword = true;
          break;
        }
      }
      if (!keyword) {
        Token t;
        t.kind = TokenKind::identifier;
        t.pos = pos;
        t.length = length;
        t.name = std::string(word);
        result.tokens.push_back(std::move(t));
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) ++i;
      std::string_view digits = source.substr(start, i - start);
      int length = static_cast<int>(digits.size());
      column += length;
      std::int64_t value = 0;
      bool overflow = false;
      for (char d : digits) {
        value = value * 10 + (d - '0');
        if (value > INT32_MAX) {
          overflow = true;
          value = INT32_MAX;
        }
      }
      if (overflow) {
        result.log.error(Phase::lex, pos, length, "número demasiado grande");
      }
      Token t;
      t.kind = TokenKind::number;
      t.pos = pos;
      t.length = length;
      t.value = static_cast<std::int32_t>(value);
      result.tokens.push_back(std::move(t));
      continue;
    }
    char next = i + 1 < source.size() ? source[i + 1] : '\0';
    auto two = [&](TokenKind kind) {
      push(kind, pos, 2);
      i += 2;
      column += 2;
    };
    auto one = [&](TokenKind kind) {
      push(kind, pos, 1);
      ++i;
      ++column;
    };
    switch (c) {
      case ':':
        if (next == '=') {
          two(TokenKind::assign);
        } else {
          result.log.error(Phase::lex, pos, 1, "carácter inválido: ':'");
          ++i;
          ++column;
        }
        continue;
      case '<':
        if (next == '>') two(TokenKind::not_equal);
        else if (next == '=') two(TokenKind::less_equal);
        else one(TokenKind::less);
        continue;
      case '>':
        if (next == '=') two(TokenKind::greater_equal);
        else one(TokenKind::greater);
        continue;
      case '=': one(TokenKind::equal); continue;
      case ',': one(TokenKind::comma); continue;
      case ';': one(TokenKind::semicolon); continue;
      case '(': one(TokenKind::lparen); continue;
      case ')': one(TokenKind::rparen); continue;
      case '+': one(TokenKind::plus); continue;
      case '-': one(TokenKind::minus); continue;
      case '*': one(TokenKind::star); continue;
      case '/': one(TokenKind::slash); continue;
      case '.': one(TokenKind::period); continue;
      default:
        result.log.error(Phase::lex, pos, 1,
                         std::string("carácter inválido: '") + c + "'");
        ++i;
        ++column;
        continue;
    }
  }
  return result;
}

}  // namespace pl0plus
