#include "pl0plus/parser.hpp"

#include <array>

namespace pl0plus {

namespace {

constexpr std::array<TokenKind, 7> kStatementFirst{
    TokenKind::identifier, TokenKind::kw_call, TokenKind::kw_begin,
    TokenKind::kw_if,      TokenKind::kw_while, TokenKind::kw_read,
    TokenKind::kw_write,
};

bool starts_statement(TokenKind kind) {
  for (TokenKind k : kStatementFirst) {
    if (k == kind) return true;
  }
  return false;
}

bool is_sync(TokenKind kind) {
  return kind == TokenKind::semicolon || kind == TokenKind::kw_end ||
         kind == TokenKind::period || kind == TokenKind::kw_const ||
         kind == TokenKind::kw_var || kind == TokenKind::kw_procedure ||
         starts_statement(kind);
}

class Parser {
 public:
  Parser(std::span<const Token> tokens, DiagnosticLog& log)
      : tokens_(tokens), log_(log) {}

  Program run() {
    Program program;
    program.block = block();
    if (!expect(TokenKind::period, "se esperaba punto")) {
      skip_to_period();
      if (!at_end()) advance();
    }
    if (!at_end()) {
      error(pos(), current().length, "texto inesperado después del punto final");
    }
    return program;
  }

 private:
  bool at_end() const { return index_ >= tokens_.size(); }
  const Token& current() const { return tokens_[index_]; }
  TokenKind kind() const { return current().kind; }
  bool check(TokenKind k) const { return !at_end() && kind() == k; }

  SourcePos pos() const {
    if (!at_end()) return current().pos;
    if (tokens_.empty()) return SourcePos{1, 1};
    const Token& last = tokens_.back();
    return SourcePos{last.pos.line, last.pos.column + last.length};
  }

  const Token& advance() { return tokens_[index_++]; }

  bool match(TokenKind k) {
    if (!check(k)) return false;
    advance();
    return true;
  }

  void error(SourcePos at, int length, std::string message) {
    log_.error(Phase::sin, at, length, std::move(message));
  }

  bool expect(TokenKind k, std::string message) {
    if (match(k)) return true;
    error(pos(), at_end() ? 0 : current().length, std::move(message));
    return false;
  }

  void skip_to_sync() {
    while (!at_end() && !is_sync(kind())) advance();
  }

  void skip_to_period() {
    while (!at_end() && kind() != TokenKind::period) advance();
  }

  Block block() {
    Block b;
    b.pos = pos();
    if (match(TokenKind::kw_const)) const_section(b);
    if (match(TokenKind::kw_var)) var_section(b);
    while (check(TokenKind::kw_procedure)) procedure_decl(b);
    b.body = statement();
    return b;
  }

  void const_section(Block& b) {
    for (;;) {
      if (!check(TokenKind::identifier)) {
        error(pos(), at_end() ? 0 : current().length, "se esperaba un identificador");
        skip_to_sync();
        break;
      }
      ConstDecl decl;
      decl.pos = current().pos;
      decl.name = advance().name;
      expect(TokenKind::equal, "se esperaba '='");
      if (check(TokenKind::number)) {
        decl.value = advance().value;
      } else {
        error(pos(), at_end() ? 0 : current().length, "se esperaba un número");
      }
      b.constants.push_back(std::move(decl));
      if (!match(TokenKind::comma)) break;
    }
    expect(TokenKind::semicolon, "se esperaba punto y coma");
  }

  void var_section(Block& b) {
    for (;;) {
      if (!check(TokenKind::identifier)) {
        error(pos(), at_end() ? 0 : current().length, "se esperaba un identificador");
        skip_to_sync();
        break;
      }
      VarDecl decl;
      decl.pos = current().pos;
      decl.name = advance().name;
      b.variables.push_back(std::move(decl));
      if (!match(TokenKind::comma)) break;
    }
    expect(TokenKind::semicolon, "se esperaba punto y coma");
  }

  void procedure_decl(Block& b) {
    ProcDecl decl;
    decl.pos = current().pos;
    advance();  // procedure
    if (check(TokenKind::identifier)) {
      decl.name = advance().name;
    } else {
      error(pos(), at_end() ? 0 : current().length, "se esperaba un identificador");
    }
    expect(TokenKind::semicolon, "se esperaba punto y coma");
    decl.block = std::make_unique<Block>(block());
    expect(TokenKind::semicolon, "se esperaba punto y coma");
    b.procedures.push_back(std::move(decl));
  }

  StatementPtr statement() {
    SourcePos at = pos();
    if (check(TokenKind::identifier)) {
      Statement::Assign node;
      node.target = IdentRef{current().name, std::nullopt, current().pos};
      advance();
      expect(TokenKind::assign, "se esperaba ':='");
      node.value = expression();
      return make_statement(std::move(node), at);
    }
    if (match(TokenKind::kw_call)) return ident_statement<Statement::Call>(at);
    if (match(TokenKind::kw_read)) return ident_statement<Statement::Read>(at);
    if (match(TokenKind::kw_write)) return ident_statement<Statement::Write>(at);
    if (match(TokenKind::kw_begin)) return sequence(at);
    if (match(TokenKind::kw_if)) {
      Statement::If node;
      node.condition = condition();
      expect(TokenKind::kw_then, "se esperaba then");
      node.then_branch = statement();
      if (match(TokenKind::kw_else)) node.else_branch = statement();
      return make_statement(std::move(node), at);
    }
    if (match(TokenKind::kw_while)) {
      Statement::While node;
      node.condition = condition();
      expect(TokenKind::kw_do, "se esperaba do");
      node.body = statement();
      return make_statement(std::move(node), at);
    }
    return make_empty_statement(at);
  }

  // call/read/write share the shape keyword + identifier.
  template <typename NodeT>
  StatementPtr ident_statement(SourcePos at) {
    if (!check(TokenKind::identifier)) {
      error(pos(), at_end() ? 0 : current().length, "se esperaba un identificador");
      return make_empty_statement(at);
    }
    IdentRef ref{current().name, std::nullopt, current().pos};
    advance();
    NodeT node;
    if constexpr (std::is_same_v<NodeT, Statement::Write>) {
      node.source = std::move(ref);
    } else {
      node.target = std::move(ref);
    }
    return make_statement(std::move(node), at);
  }

  StatementPtr sequence(SourcePos at) {
    Statement::Sequence node;
    auto append = [&](StatementPtr s) {
      if (!std::holds_alternative<Statement::Empty>(s->node))
        node.statements.push_back(std::move(s));
    };
    for (;;) {
      append(statement());
      if (match(TokenKind::semicolon)) continue;
      if (match(TokenKind::kw_end)) break;
      if (at_end() || check(TokenKind::period)) {
        error(pos(), at_end() ? 0 : current().length, "se esperaba end");
        break;
      }
      error(pos(), current().length, "se esperaba punto y coma o end");
      while (!at_end() && !check(TokenKind::semicolon) && !check(TokenKind::kw_end) &&
             !check(TokenKind::period) && !starts_statement(kind())) {
        advance();
      }
      if (!at_end() && starts_statement(kind())) continue;
    }
    return make_statement(std::move(node), at);
  }

  ConditionPtr condition() {
    SourcePos at = pos();
    auto cond = std::make_unique<Condition>();
    cond->pos = at;
    if (match(TokenKind::kw_odd)) {
      cond->node = Condition::OddTest{expression()};
      return cond;
    }
    ExprPtr lhs = expression();
    RelationOp op = RelationOp::equal;
    bool have_op = true;
    switch (at_end() ? TokenKind::period : kind()) {
      case TokenKind::equal: op = RelationOp::equal; break;
      case TokenKind::not_equal: op = RelationOp::not_equal; break;
      case TokenKind::less: op = RelationOp::less; break;
      case TokenKind::greater: op = RelationOp::greater; break;
      case TokenKind::less_equal: op = RelationOp::less_equal; break;
      case TokenKind::greater_equal: op = RelationOp::greater_equal; break;
      default: have_op = false; break;
    }
    if (!have_op) {
      error(pos(), at_end() ? 0 : current().length, "se esperaba operador relacional");
      cond->node = Condition::Relation{RelationOp::equal, std::move(lhs), make_number(0, at)};
      return cond;
    }
    advance();
    cond->node = Condition::Relation{op, std::move(lhs), expression()};
    return cond;
  }

  ExprPtr expression() {
    SourcePos at = pos();
    bool negate = false;
    if (check(TokenKind::plus) || check(TokenKind::minus)) {
      negate = kind() == TokenKind::minus;
      advance();
    }
    ExprPtr lhs = term();
    if (negate) lhs = make_negate(std::move(lhs), at);
    while (check(TokenKind::plus) || check(TokenKind::minus)) {
      BinaryOp op = kind() == TokenKind::plus ? BinaryOp::add : BinaryOp::subtract;
      advance();
      lhs = make_binary(op, std::move(lhs), term(), at);
    }
    return lhs;
  }

  ExprPtr term() {
    SourcePos at = pos();
    ExprPtr lhs = factor();
    while (check(TokenKind::star) || check(TokenKind::slash)) {
      BinaryOp op = kind() == TokenKind::star ? BinaryOp::multiply : BinaryOp::divide;
      advance();
      lhs = make_binary(op, std::move(lhs), factor(), at);
    }
    return lhs;
  }

  ExprPtr factor() {
    SourcePos at = pos();
    if (check(TokenKind::identifier)) {
      ExprPtr e = make_ident(current().name, at);
      advance();
      return e;
    }
    if (check(TokenKind::number)) {
      ExprPtr e = make_number(current().value, at);
      advance();
      return e;
    }
    if (match(TokenKind::lparen)) {
      ExprPtr e = expression();
      expect(TokenKind::rparen, "se esperaba ')'");
      return e;
    }
    error(at, at_end() ? 0 : current().length, "se esperaba un factor");
    return make_number(0, at);
  }

  std::span<const Token> tokens_;
  std::size_t index_ = 0;
  DiagnosticLog& log_;
};

}  // namespace

ParseResult parse(std::span<const Token> tokens) {
  ParseResult result;
  Parser parser(tokens, result.log);
  result.program = parser.run();
  return result;
}

}  // namespace pl0plus
