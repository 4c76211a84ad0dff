#include "pl0plus/ast_interp.hpp"

#include <map>

namespace pl0plus {

namespace {

// Native recursion guard; differential fixtures stay far below this.
constexpr int kMaxCallDepth = 5000;

struct Frame {
  Frame* parent = nullptr;  // static link
  std::vector<std::int32_t> cells;
};

struct Stop {
  RunExit exit;
  std::string message;
};

class Interp {
 public:
  Interp(std::span<const std::int32_t> input, std::int64_t step_limit)
      : input_(input), limit_(step_limit) {}

  InterpResult run(const Program& program) {
    collect(program.block);
    InterpResult result;
    try {
      Frame main_frame;
      main_frame.cells.assign(program.block.variables.size(), 0);
      execute_block(program.block, main_frame, 0);
      result.exit = RunExit::halted;
    } catch (const Stop& stop) {
      result.exit = stop.exit;
      result.fault_message = stop.message;
    }
    result.output = std::move(output_);
    return result;
  }

 private:
  void collect(const Block& block) {
    for (const ConstDecl& decl : block.constants) {
      if (decl.code) const_values_[decl.code->text()] = decl.value;
    }
    for (const ProcDecl& decl : block.procedures) {
      if (decl.code && decl.block) {
        blocks_[decl.code->text()] = decl.block.get();
        collect(*decl.block);
      }
    }
  }

  void tick() {
    if (++steps_ > limit_) throw Stop{RunExit::limit, ""};
  }

  [[noreturn]] void fault(std::string message) {
    throw Stop{RunExit::faulted, std::move(message)};
  }

  const SymbolCode& annotation(const IdentRef& ref) {
    if (!ref.symbol) fault("árbol sin anotaciones semánticas");
    return *ref.symbol;
  }

  Frame& declaring_frame(const SymbolCode& code, Frame& frame, int level) {
    int dif = level - code.declaring_level();
    Frame* target = &frame;
    while (dif > 0 && target) {
      target = target->parent;
      --dif;
    }
    if (!target || dif > 0) fault("cadena estática rota");
    return *target;
  }

  std::int32_t& cell(const IdentRef& ref, Frame& frame, int level) {
    const SymbolCode& code = annotation(ref);
    Frame& target = declaring_frame(code, frame, level);
    auto index = static_cast<std::size_t>(code.correlative.value_or(0));
    if (index >= target.cells.size()) fault("pila fuera de límites");
    return target.cells[index];
  }

  std::int32_t value_of(const ArithResult& r) {
    if (r.fault == ArithFault::division_by_zero) fault("división por cero");
    if (r.fault == ArithFault::overflow) fault("desbordamiento aritmético");
    return r.value;
  }

  std::int32_t eval(const Expr& e, Frame& frame, int level) {
    tick();
    return std::visit(
        [&](const auto& node) -> std::int32_t {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Expr::Binary>) {
            std::int32_t lhs = eval(*node.lhs, frame, level);
            std::int32_t rhs = eval(*node.rhs, frame, level);
            return value_of(apply_binary(binary_operation(node.op), lhs, rhs));
          } else if constexpr (std::is_same_v<T, Expr::Negate>) {
            std::int32_t operand = eval(*node.operand, frame, level);
            return value_of(apply_unary(OperationCode::negate, operand));
          } else if constexpr (std::is_same_v<T, IdentRef>) {
            const SymbolCode& code = annotation(node);
            if (code.kind == SymbolKind::constant) {
              auto it = const_values_.find(code.text());
              if (it == const_values_.end()) fault("árbol sin anotaciones semánticas");
              return it->second;
            }
            return cell(node, frame, level);
          } else {
            return node.value;
          }
        },
        e.node);
  }

  static OperationCode binary_operation(BinaryOp op) {
    switch (op) {
      case BinaryOp::add: return OperationCode::add;
      case BinaryOp::subtract: return OperationCode::subtract;
      case BinaryOp::multiply: return OperationCode::multiply;
      case BinaryOp::divide: return OperationCode::divide;
    }
    return OperationCode::add;
  }

  static OperationCode relation_operation(RelationOp op) {
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

  bool test(const Condition& c, Frame& frame, int level) {
    tick();
    if (const auto* rel = std::get_if<Condition::Relation>(&c.node)) {
      std::int32_t lhs = eval(*rel->lhs, frame, level);
      std::int32_t rhs = eval(*rel->rhs, frame, level);
      return value_of(apply_binary(relation_operation(rel->op), lhs, rhs)) != 0;
    }
    std::int32_t operand = eval(*std::get<Condition::OddTest>(c.node).operand, frame, level);
    return value_of(apply_unary(OperationCode::odd, operand)) != 0;
  }

  void execute_block(const Block& block, Frame& frame, int level) {
    if (block.body) execute(*block.body, frame, level);
  }

  void execute(const Statement& s, Frame& frame, int level) {
    tick();
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Statement::Assign>) {
            std::int32_t value = eval(*node.value, frame, level);
            cell(node.target, frame, level) = value;
          } else if constexpr (std::is_same_v<T, Statement::Call>) {
            call(node.target, frame, level);
          } else if constexpr (std::is_same_v<T, Statement::Sequence>) {
            for (const auto& child : node.statements) execute(*child, frame, level);
          } else if constexpr (std::is_same_v<T, Statement::If>) {
            if (test(*node.condition, frame, level)) {
              execute(*node.then_branch, frame, level);
            } else if (node.else_branch) {
              execute(*node.else_branch, frame, level);
            }
          } else if constexpr (std::is_same_v<T, Statement::While>) {
            while (test(*node.condition, frame, level))
              execute(*node.body, frame, level);
          } else if constexpr (std::is_same_v<T, Statement::Read>) {
            if (next_input_ >= input_.size()) fault("entrada agotada");
            cell(node.target, frame, level) = input_[next_input_++];
          } else if constexpr (std::is_same_v<T, Statement::Write>) {
            const SymbolCode& code = annotation(node.source);
            if (code.kind == SymbolKind::constant) {
              auto it = const_values_.find(code.text());
              if (it == const_values_.end()) fault("árbol sin anotaciones semánticas");
              output_.push_back(it->second);
            } else {
              output_.push_back(cell(node.source, frame, level));
            }
          }
        },
        s.node);
  }

  void call(const IdentRef& target, Frame& frame, int level) {
    const SymbolCode& code = annotation(target);
    auto it = blocks_.find(code.text());
    if (it == blocks_.end()) fault("árbol sin anotaciones semánticas");
    if (++call_depth_ > kMaxCallDepth) fault("pila fuera de límites");
    Frame callee;
    callee.parent = &declaring_frame(code, frame, level);
    callee.cells.assign(it->second->variables.size(), 0);
    execute_block(*it->second, callee, code.declaring_level() + 1);
    --call_depth_;
  }

  std::span<const std::int32_t> input_;
  std::size_t next_input_ = 0;
  std::vector<std::int32_t> output_;
  std::int64_t limit_;
  std::int64_t steps_ = 0;
  int call_depth_ = 0;
  std::map<std::string, const Block*> blocks_;
  std::map<std::string, std::int32_t> const_values_;
};

}  // namespace

InterpResult interpret(const Program& program, std::span<const std::int32_t> input,
                       std::int64_t step_limit) {
  return Interp(input, step_limit).run(program);
}

}  // namespace pl0plus
