#ifndef PL0PLUS_AST_HPP
#define PL0PLUS_AST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pl0plus/diagnostics.hpp"
#include "pl0plus/symbols.hpp"

namespace pl0plus {

enum class BinaryOp { add, subtract, multiply, divide };
enum class RelationOp { equal, not_equal, less, greater, less_equal, greater_equal };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

/// An identifier use site. `symbol` is absent until semantic analysis
/// resolves the reference (and stays absent when resolution fails).
struct IdentRef {
  std::string name;
  std::optional<SymbolCode> symbol;
  SourcePos pos;
};

struct Expr {
  struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
  };
  struct Negate {
    ExprPtr operand;
  };
  struct Number {
    std::int32_t value;
  };
  using Node = std::variant<Binary, Negate, IdentRef, Number>;

  Node node;
  SourcePos pos;
};

struct Condition {
  struct Relation {
    RelationOp op;
    ExprPtr lhs;
    ExprPtr rhs;
  };
  struct OddTest {
    ExprPtr operand;
  };
  using Node = std::variant<Relation, OddTest>;

  Node node;
  SourcePos pos;
};
using ConditionPtr = std::unique_ptr<Condition>;

struct Statement;
using StatementPtr = std::unique_ptr<Statement>;
struct Block;

struct Statement {
  struct Assign {
    IdentRef target;
    ExprPtr value;
  };
  struct Call {
    IdentRef target;
  };
  /// begin/end group. Holds only non-empty statements; the parser drops
  /// the ε cases so a sequence's serialized form round-trips.
  struct Sequence {
    std::vector<StatementPtr> statements;
  };
  struct If {
    ConditionPtr condition;
    StatementPtr then_branch;         // never null; may hold Empty
    StatementPtr else_branch;         // null when there is no else
  };
  struct While {
    ConditionPtr condition;
    StatementPtr body;                // never null; may hold Empty
  };
  struct Read {
    IdentRef target;
  };
  struct Write {
    IdentRef source;
  };
  struct Empty {};
  using Node = std::variant<Assign, Call, Sequence, If, While, Read, Write, Empty>;

  Node node;
  SourcePos pos;
};

struct ConstDecl {
  std::string name;
  std::int32_t value = 0;
  SourcePos pos;
  std::optional<SymbolCode> code;  // set by semantic analysis
};

struct VarDecl {
  std::string name;
  SourcePos pos;
  std::optional<SymbolCode> code;
};

struct ProcDecl;

struct Block {
  std::vector<ConstDecl> constants;
  std::vector<VarDecl> variables;
  std::vector<ProcDecl> procedures;
  StatementPtr body;  // never null; Empty for the ε production
  SourcePos pos;
};

struct ProcDecl {
  std::string name;
  std::unique_ptr<Block> block;
  SourcePos pos;
  std::optional<SymbolCode> code;
};

struct Program {
  Block block;
};

// Structural equality. Positions participate only where the XML tree format
// carries them: identifier and number leaves and non-empty statements.
// Annotations (codes/symbols) always participate.
bool equals(const Expr& a, const Expr& b);
bool equals(const Condition& a, const Condition& b);
bool equals(const Statement& a, const Statement& b);
bool equals(const Block& a, const Block& b);
bool equals(const Program& a, const Program& b);

// Convenience builders, used by the parser and by tests.
ExprPtr make_number(std::int32_t value, SourcePos pos);
ExprPtr make_ident(std::string name, SourcePos pos);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, SourcePos pos);
ExprPtr make_negate(ExprPtr operand, SourcePos pos);
StatementPtr make_statement(Statement::Node node, SourcePos pos);
StatementPtr make_empty_statement(SourcePos pos);

}  // namespace pl0plus

#endif
