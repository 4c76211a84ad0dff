#include "pl0plus/ast.hpp"

namespace pl0plus {

namespace {

bool equals(const IdentRef& a, const IdentRef& b) {
  return a.name == b.name && a.symbol == b.symbol && a.pos == b.pos;
}

bool equals_ptr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return equals(*a, *b);
}

bool equals_ptr(const ConditionPtr& a, const ConditionPtr& b) {
  if (!a || !b) return !a && !b;
  return equals(*a, *b);
}

bool equals_ptr(const StatementPtr& a, const StatementPtr& b) {
  if (!a || !b) return !a && !b;
  return equals(*a, *b);
}

}  // namespace

bool equals(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Expr::Binary>) {
          return lhs.op == rhs.op && equals_ptr(lhs.lhs, rhs.lhs) &&
                 equals_ptr(lhs.rhs, rhs.rhs);
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return equals_ptr(lhs.operand, rhs.operand);
        } else if constexpr (std::is_same_v<T, IdentRef>) {
          return equals(lhs, rhs);
        } else {
          return lhs.value == rhs.value && a.pos == b.pos;
        }
      },
      a.node);
}

bool equals(const Condition& a, const Condition& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* rel = std::get_if<Condition::Relation>(&a.node)) {
    const auto& other = std::get<Condition::Relation>(b.node);
    return rel->op == other.op && equals_ptr(rel->lhs, other.lhs) &&
           equals_ptr(rel->rhs, other.rhs);
  }
  const auto& odd = std::get<Condition::OddTest>(a.node);
  const auto& other = std::get<Condition::OddTest>(b.node);
  return equals_ptr(odd.operand, other.operand);
}

bool equals(const Statement& a, const Statement& b) {
  if (a.node.index() != b.node.index()) return false;
  bool empty = std::holds_alternative<Statement::Empty>(a.node);
  if (!empty && a.pos != b.pos) return false;
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Statement::Assign>) {
          return equals(lhs.target, rhs.target) && equals_ptr(lhs.value, rhs.value);
        } else if constexpr (std::is_same_v<T, Statement::Call>) {
          return equals(lhs.target, rhs.target);
        } else if constexpr (std::is_same_v<T, Statement::Sequence>) {
          if (lhs.statements.size() != rhs.statements.size()) return false;
          for (std::size_t i = 0; i < lhs.statements.size(); ++i) {
            if (!equals_ptr(lhs.statements[i], rhs.statements[i])) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Statement::If>) {
          return equals_ptr(lhs.condition, rhs.condition) &&
                 equals_ptr(lhs.then_branch, rhs.then_branch) &&
                 equals_ptr(lhs.else_branch, rhs.else_branch);
        } else if constexpr (std::is_same_v<T, Statement::While>) {
          return equals_ptr(lhs.condition, rhs.condition) &&
                 equals_ptr(lhs.body, rhs.body);
        } else if constexpr (std::is_same_v<T, Statement::Read>) {
          return equals(lhs.target, rhs.target);
        } else if constexpr (std::is_same_v<T, Statement::Write>) {
          return equals(lhs.source, rhs.source);
        } else {
          return true;
        }
      },
      a.node);
}

bool equals(const Block& a, const Block& b) {
  if (a.constants.size() != b.constants.size()) return false;
  for (std::size_t i = 0; i < a.constants.size(); ++i) {
    const auto& x = a.constants[i];
    const auto& y = b.constants[i];
    if (x.name != y.name || x.value != y.value || x.code != y.code) return false;
  }
  if (a.variables.size() != b.variables.size()) return false;
  for (std::size_t i = 0; i < a.variables.size(); ++i) {
    const auto& x = a.variables[i];
    const auto& y = b.variables[i];
    if (x.name != y.name || x.code != y.code) return false;
  }
  if (a.procedures.size() != b.procedures.size()) return false;
  for (std::size_t i = 0; i < a.procedures.size(); ++i) {
    const auto& x = a.procedures[i];
    const auto& y = b.procedures[i];
    if (x.name != y.name || x.code != y.code) return false;
    if (!x.block || !y.block) {
      if (static_cast<bool>(x.block) != static_cast<bool>(y.block)) return false;
    } else if (!equals(*x.block, *y.block)) {
      return false;
    }
  }
  return equals_ptr(a.body, b.body);
}

bool equals(const Program& a, const Program& b) { return equals(a.block, b.block); }

ExprPtr make_number(std::int32_t value, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->node = Expr::Number{value};
  e->pos = pos;
  return e;
}

ExprPtr make_ident(std::string name, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->node = IdentRef{std::move(name), std::nullopt, pos};
  e->pos = pos;
  return e;
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->node = Expr::Binary{op, std::move(lhs), std::move(rhs)};
  e->pos = pos;
  return e;
}

ExprPtr make_negate(ExprPtr operand, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->node = Expr::Negate{std::move(operand)};
  e->pos = pos;
  return e;
}

StatementPtr make_statement(Statement::Node node, SourcePos pos) {
  auto s = std::make_unique<Statement>();
  s->node = std::move(node);
  s->pos = pos;
  return s;
}

StatementPtr make_empty_statement(SourcePos pos) {
  return make_statement(Statement::Empty{}, pos);
}

}  // namespace pl0plus
