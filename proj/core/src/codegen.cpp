#include "pl0plus/codegen.hpp"

#include <map>

namespace pl0plus {

namespace {

OperationCode binary_operation(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return OperationCode::add;
    case BinaryOp::subtract: return OperationCode::subtract;
    case BinaryOp::multiply: return OperationCode::multiply;
    case BinaryOp::divide: return OperationCode::divide;
  }
  return OperationCode::add;
}

OperationCode relation_operation(RelationOp op) {
  switch (op) {
    case RelationOp::equal: return OperationCode::equal;
    case RelationOp::not_equal: return OperationCode::not_equal;
    case RelationOp::less: return OperationCode::less;
    case RelationOp::greater: return OperationCode::greater;
    case RelationOp::less_equal: return OperationCode::less_equal;
    case RelationOp::greater_equal: return OperationCode::greater_equal;
  }
  return OperationCode::equal;
}

class Generator {
 public:
  explicit Generator(GenResult& result) : result_(result) {}

  void run(const Program& program) {
    block(program.block, SymbolCode::main_block());
    for (const auto& [address, code_text] : call_patches_) {
      auto it = entries_.find(code_text);
      if (it == entries_.end()) {
        result_.log.error(Phase::gen, SourcePos{1, 1}, 0,
                          "procedimiento sin código generado: " + code_text);
        continue;
      }
      result_.code[static_cast<std::size_t>(address)].b = it->second;
    }
  }

 private:
  std::int32_t here() const { return static_cast<std::int32_t>(result_.code.size()); }

  std::int32_t emit(Instruction instr) {
    result_.code.push_back(instr);
    return here() - 1;
  }

  void patch_target(std::int32_t address, std::int32_t target) {
    result_.code[static_cast<std::size_t>(address)].a = target;
  }

  void missing_annotation(SourcePos pos) {
    result_.log.error(Phase::gen, pos, 0, "árbol sin anotaciones semánticas");
  }

  void block(const Block& b, const SymbolCode& code) {
    int level = code.correlative ? code.declaring_level() + 1 : 0;
    for (const ConstDecl& decl : b.constants) {
      if (decl.code) const_values_[decl.code->text()] = decl.value;
    }
    std::int32_t header = emit(Instruction::sal(0));
    for (const ProcDecl& decl : b.procedures) {
      if (decl.block && decl.code) block(*decl.block, *decl.code);
    }
    std::int32_t entry = here();
    patch_target(header, entry);
    entries_[code.text()] = entry;
    result_.layouts.push_back(BlockLayout{
        code, static_cast<int>(b.variables.size()), entry, header, level});
    emit(Instruction::ins(static_cast<std::int32_t>(b.variables.size()) + 3));
    level_ = level;
    if (b.body) statement(*b.body);
    emit(Instruction::ret());
  }

  void statement(const Statement& s) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Statement::Assign>) {
            expr(*node.value);
            store(node.target);
          } else if constexpr (std::is_same_v<T, Statement::Call>) {
            call(node.target);
          } else if constexpr (std::is_same_v<T, Statement::Sequence>) {
            for (const auto& child : node.statements) statement(*child);
          } else if constexpr (std::is_same_v<T, Statement::If>) {
            condition(*node.condition);
            std::int32_t skip_then = emit(Instruction::sac(0));
            statement(*node.then_branch);
            if (node.else_branch) {
              std::int32_t skip_else = emit(Instruction::sal(0));
              patch_target(skip_then, here());
              statement(*node.else_branch);
              patch_target(skip_else, here());
            } else {
              patch_target(skip_then, here());
            }
          } else if constexpr (std::is_same_v<T, Statement::While>) {
            std::int32_t top = here();
            condition(*node.condition);
            std::int32_t exit_jump = emit(Instruction::sac(0));
            statement(*node.body);
            emit(Instruction::sal(top));
            patch_target(exit_jump, here());
          } else if constexpr (std::is_same_v<T, Statement::Read>) {
            emit(Instruction::lee());
            store(node.target);
          } else if constexpr (std::is_same_v<T, Statement::Write>) {
            load(node.source);
            emit(Instruction::esc());
          }
        },
        s.node);
  }

  void condition(const Condition& c) {
    if (const auto* rel = std::get_if<Condition::Relation>(&c.node)) {
      expr(*rel->lhs);
      expr(*rel->rhs);
      emit(Instruction::opr(relation_operation(rel->op)));
      return;
    }
    expr(*std::get<Condition::OddTest>(c.node).operand);
    emit(Instruction::opr(OperationCode::odd));
  }

  void expr(const Expr& e) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Expr::Binary>) {
            expr(*node.lhs);
            expr(*node.rhs);
            emit(Instruction::opr(binary_operation(node.op)));
          } else if constexpr (std::is_same_v<T, Expr::Negate>) {
            expr(*node.operand);
            emit(Instruction::opr(OperationCode::negate));
          } else if constexpr (std::is_same_v<T, IdentRef>) {
            load(node);
          } else {
            emit(Instruction::lit(node.value));
          }
        },
        e.node);
  }

  void load(const IdentRef& ref) {
    if (!ref.symbol) {
      missing_annotation(ref.pos);
      emit(Instruction::lit(0));
      return;
    }
    if (ref.symbol->kind == SymbolKind::constant) {
      auto it = const_values_.find(ref.symbol->text());
      if (it == const_values_.end()) {
        missing_annotation(ref.pos);
        emit(Instruction::lit(0));
        return;
      }
      emit(Instruction::lit(it->second));
      return;
    }
    emit(Instruction::car(level_ - ref.symbol->declaring_level(),
                          3 + ref.symbol->correlative.value_or(0)));
  }

  void store(const IdentRef& ref) {
    if (!ref.symbol || ref.symbol->kind != SymbolKind::variable) {
      missing_annotation(ref.pos);
      emit(Instruction::alm(0, 3));
      return;
    }
    emit(Instruction::alm(level_ - ref.symbol->declaring_level(),
                          3 + ref.symbol->correlative.value_or(0)));
  }

  void call(const IdentRef& ref) {
    if (!ref.symbol || ref.symbol->kind != SymbolKind::block) {
      missing_annotation(ref.pos);
      return;
    }
    std::int32_t dif = level_ - ref.symbol->declaring_level();
    std::string key = ref.symbol->text();
    auto it = entries_.find(key);
    std::int32_t address = emit(Instruction::lla(dif, 0));
    if (it != entries_.end()) {
      result_.code[static_cast<std::size_t>(address)].b = it->second;
    } else {
      call_patches_.emplace_back(address, std::move(key));
    }
  }

  GenResult& result_;
  int level_ = 0;
  std::map<std::string, std::int32_t> entries_;      // block code text -> INS address
  std::map<std::string, std::int32_t> const_values_; // constant code text -> value
  std::vector<std::pair<std::int32_t, std::string>> call_patches_;
};

}  // namespace

GenResult generate(const Program& program) {
  GenResult result;
  Generator generator(result);
  generator.run(program);
  return result;
}

std::vector<BlockLayout> layout_blocks(const Program& program) {
  return generate(program).layouts;
}

}  // namespace pl0plus
