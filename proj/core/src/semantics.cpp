#include "pl0plus/semantics.hpp"

namespace pl0plus {

namespace {

enum class RefContext { value, target, call };

class Analyzer {
 public:
  explicit Analyzer(AnalysisResult& result) : result_(result) {}

  void run(Program& program) {
    result_.main_block_code = SymbolCode::main_block();
    block(program.block, result_.main_block_code);
    for (const Diagnostic& w : pending_warnings_) result_.log.report(w);
  }

 private:
  void error(SourcePos at, const std::string& name, std::string message) {
    result_.log.error(Phase::sem, at, static_cast<int>(name.size()),
                      std::move(message));
  }

  void declare(SymbolEntry entry) {
    if (!scopes_.declare(entry)) {
      error(entry.decl_pos, entry.name,
            "símbolo duplicado en el mismo ámbito: " + entry.name);
    }
    result_.symbols.push_back(std::move(entry));
  }

  void block(Block& b, const SymbolCode& code) {
    scopes_.push(code);
    for (ConstDecl& decl : b.constants) {
      SymbolCode c{SymbolKind::constant, scopes_.current_child_path(),
                   scopes_.take_correlative(SymbolKind::constant)};
      decl.code = c;
      declare(SymbolEntry{decl.name, SymbolKind::constant, std::move(c),
                          decl.value, 0, decl.pos});
    }
    for (VarDecl& decl : b.variables) {
      int correlative = scopes_.take_correlative(SymbolKind::variable);
      SymbolCode c{SymbolKind::variable, scopes_.current_child_path(), correlative};
      decl.code = c;
      declare(SymbolEntry{decl.name, SymbolKind::variable, std::move(c), 0,
                          correlative, decl.pos});
    }
    // All procedures of the block are visible before any body is walked;
    // this is what lets sibling procedures call each other both ways.
    for (ProcDecl& decl : b.procedures) {
      SymbolCode c{SymbolKind::block, scopes_.current_child_path(),
                   scopes_.take_correlative(SymbolKind::block)};
      decl.code = c;
      declare(SymbolEntry{decl.name, SymbolKind::block, std::move(c), 0, 0,
                          decl.pos});
    }
    for (ProcDecl& decl : b.procedures) {
      if (decl.block && decl.code) block(*decl.block, *decl.code);
    }
    if (b.body) statement(*b.body);
    for (const SymbolEntry& entry :
         scopes_.unused_in_current_scope(SymbolKind::variable)) {
      pending_warnings_.push_back(
          Diagnostic{Severity::warning, Phase::sem, entry.decl_pos,
                     static_cast<int>(entry.name.size()),
                     "variable no utilizada: " + entry.name});
    }
    scopes_.pop();
  }

  void statement(Statement& s) {
    std::visit(
        [&](auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Statement::Assign>) {
            reference(node.target, RefContext::target);
            expr(*node.value);
          } else if constexpr (std::is_same_v<T, Statement::Call>) {
            reference(node.target, RefContext::call);
          } else if constexpr (std::is_same_v<T, Statement::Sequence>) {
            for (auto& child : node.statements) statement(*child);
          } else if constexpr (std::is_same_v<T, Statement::If>) {
            condition(*node.condition);
            statement(*node.then_branch);
            if (node.else_branch) statement(*node.else_branch);
          } else if constexpr (std::is_same_v<T, Statement::While>) {
            condition(*node.condition);
            statement(*node.body);
          } else if constexpr (std::is_same_v<T, Statement::Read>) {
            reference(node.target, RefContext::target);
          } else if constexpr (std::is_same_v<T, Statement::Write>) {
            reference(node.source, RefContext::value);
          }
        },
        s.node);
  }

  void condition(Condition& c) {
    if (auto* rel = std::get_if<Condition::Relation>(&c.node)) {
      expr(*rel->lhs);
      expr(*rel->rhs);
    } else {
      expr(*std::get<Condition::OddTest>(c.node).operand);
    }
  }

  void expr(Expr& e) {
    std::visit(
        [&](auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Expr::Binary>) {
            expr(*node.lhs);
            expr(*node.rhs);
          } else if constexpr (std::is_same_v<T, Expr::Negate>) {
            expr(*node.operand);
          } else if constexpr (std::is_same_v<T, IdentRef>) {
            reference(node, RefContext::value);
          }
        },
        e.node);
  }

  void reference(IdentRef& ref, RefContext context) {
    auto res = scopes_.resolve(ref.name);
    if (!res) {
      error(ref.pos, ref.name, "símbolo no declarado: " + ref.name);
      return;
    }
    scopes_.mark_used(ref.name);
    switch (context) {
      case RefContext::value:
        if (res->entry.kind == SymbolKind::block) {
          error(ref.pos, ref.name,
                "identificador de procedimiento usado en una expresión: " + ref.name);
          return;
        }
        break;
      case RefContext::target:
        if (res->entry.kind == SymbolKind::constant) {
          error(ref.pos, ref.name, "no se puede modificar una constante: " + ref.name);
          return;
        }
        if (res->entry.kind == SymbolKind::block) {
          error(ref.pos, ref.name,
                "identificador de procedimiento usado como variable: " + ref.name);
          return;
        }
        break;
      case RefContext::call:
        if (res->entry.kind != SymbolKind::block) {
          error(ref.pos, ref.name, "call requiere un procedimiento: " + ref.name);
          return;
        }
        break;
    }
    ref.symbol = res->entry.code;
  }

  AnalysisResult& result_;
  ScopeChain scopes_;
  std::vector<Diagnostic> pending_warnings_;
};

}  // namespace

AnalysisResult analyze(Program& program) {
  AnalysisResult result;
  Analyzer analyzer(result);
  analyzer.run(program);
  return result;
}

}  // namespace pl0plus
