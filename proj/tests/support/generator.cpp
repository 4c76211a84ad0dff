#include "generator.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace pl0plus::testsup {
namespace {

struct Visible {
  std::string name;
  bool is_const = false;
};

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  GeneratedProgram run() {
    block(0, true);
    out_ += ".\n";
    return {std::move(out_), reads_};
  }

 private:
  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool chance(int percent) { return pick(1, 100) <= percent; }

  std::string fresh(char prefix) {
    return std::string(1, prefix) + std::to_string(name_counter_++);
  }

  void line(const std::string& text) {
    out_.append(static_cast<std::size_t>(indent_) * 2, ' ');
    out_ += text;
    out_ += '\n';
  }

  // Declarations of one block plus its statement. `top` is the main block.
  void block(int depth, bool top) {
    std::size_t scope_floor = visible_.size();
    std::size_t callable_floor = callable_.size();

    int const_count = chance(50) ? pick(1, 2) : 0;
    if (const_count > 0) {
      std::string decl = "const ";
      for (int i = 0; i < const_count; ++i) {
        std::string name = fresh('k');
        decl += name + " = " + std::to_string(pick(0, 50));
        if (i + 1 < const_count) decl += ", ";
        visible_.push_back({name, true});
      }
      line(decl + ";");
    }

    int var_count = top ? pick(2, 4) : pick(0, 3);
    std::vector<std::string> own_vars;
    if (var_count > 0) {
      std::string decl = "var ";
      for (int i = 0; i < var_count; ++i) {
        // Occasionally shadow something from an enclosing block.
        std::string name;
        if (!top && chance(20) && scope_floor > 0) {
          name = visible_[static_cast<std::size_t>(pick(0, static_cast<int>(scope_floor) - 1))].name;
          bool clashes = std::any_of(visible_.begin() + static_cast<long>(scope_floor),
                                     visible_.end(),
                                     [&](const Visible& v) { return v.name == name; });
          if (clashes) name = fresh('x');
        } else {
          name = fresh('x');
        }
        decl += name;
        if (i + 1 < var_count) decl += ", ";
        visible_.push_back({name, false});
        own_vars.push_back(name);
      }
      line(decl + ";");
    }

    int proc_count = 0;
    if (depth < 3 && proc_budget_ > 0) proc_count = std::min(proc_budget_, pick(0, 2) + (top ? 1 : 0));
    for (int i = 0; i < proc_count && proc_budget_ > 0; ++i) {
      --proc_budget_;
      std::string name = fresh('p');
      line("procedure " + name + ";");
      ++indent_;
      block(depth + 1, false);
      --indent_;
      line(";");
      callable_.push_back(name);
    }

    body(top);

    visible_.resize(scope_floor);
    callable_.resize(callable_floor);
  }

  void body(bool top) {
    int count = std::min(stmt_budget_, top ? pick(2, 6) : pick(1, 4));
    if (count <= 0) count = 1;
    line("begin");
    ++indent_;
    for (int i = 0; i < count; ++i) {
      statement(0, top && i < 3, {});
      if (i + 1 < count) out_.insert(out_.size() - 1, ";");
    }
    --indent_;
    line("end");
  }

  // `may_read` only at the top level of the main body so each read runs at
  // most once. `frozen` holds loop counters the statement must not assign.
  // Always emits exactly one statement, so it composes under then/else/do.
  void statement(int depth, bool may_read, std::vector<std::string> frozen) {
    if (stmt_budget_ > 0) --stmt_budget_;
    int roll = pick(1, 100);
    if (may_read && roll <= 15 && reads_ < 3) {
      std::string t = target(frozen);
      if (!t.empty()) {
        ++reads_;
        line("read " + t);
        return;
      }
    }
    if (roll <= 40 || depth >= 3 || stmt_budget_ <= 0) {
      assign_or_write(frozen);
      return;
    }
    if (roll <= 55) {
      line("write " + readable());
      return;
    }
    if (roll <= 70 && !callable_.empty() && frozen.empty()) {
      line("call " + callable_[static_cast<std::size_t>(pick(0, static_cast<int>(callable_.size()) - 1))]);
      return;
    }
    if (roll <= 85) {
      line("if " + condition() + " then");
      ++indent_;
      statement(depth + 1, false, frozen);
      --indent_;
      if (chance(50)) {
        line("else");
        ++indent_;
        statement(depth + 1, false, frozen);
        --indent_;
      }
      return;
    }
    // Bounded loop: a counter outside `frozen` decrements to zero and the
    // body never touches it. Wrapped in begin/end so the counter priming
    // travels with the loop as a single statement.
    std::string counter = target(frozen);
    if (counter.empty() || loop_depth_ >= 2) {
      assign_or_write(frozen);
      return;
    }
    line("begin");
    ++indent_;
    line(counter + " := " + std::to_string(pick(1, 3)) + ";");
    line("while " + counter + " > 0 do");
    line("begin");
    ++indent_;
    ++loop_depth_;
    frozen.push_back(counter);
    int body_count = pick(1, 2);
    for (int i = 0; i < body_count; ++i) {
      statement(depth + 1, false, frozen);
      out_.insert(out_.size() - 1, ";");
    }
    --loop_depth_;
    line(counter + " := " + counter + " - 1");
    --indent_;
    line("end");
    --indent_;
    line("end");
  }

  void assign_or_write(const std::vector<std::string>& frozen) {
    std::string t = target(frozen);
    if (t.empty()) {
      line("write " + readable());
      return;
    }
    line(t + " := " + expression(0));
  }

  // write takes a bare identifier; any visible const or var qualifies. The
  // top block always declares variables, so this never comes up empty.
  std::string readable() {
    return visible_[static_cast<std::size_t>(
                        pick(0, static_cast<int>(visible_.size()) - 1))]
        .name;
  }

  // A variable that may be assigned. Empty only if nothing qualifies.
  std::string target(const std::vector<std::string>& frozen) {
    std::vector<std::string> pool;
    for (const Visible& v : visible_) {
      if (v.is_const) continue;
      if (std::find(frozen.begin(), frozen.end(), v.name) != frozen.end()) continue;
      // Shadowed names resolve innermost; any visible occurrence works.
      pool.push_back(v.name);
    }
    if (pool.empty()) return {};
    return pool[static_cast<std::size_t>(pick(0, static_cast<int>(pool.size()) - 1))];
  }

  std::string operand() {
    if (!visible_.empty() && chance(60)) {
      const Visible& v = visible_[static_cast<std::size_t>(pick(0, static_cast<int>(visible_.size()) - 1))];
      return v.name;
    }
    if (chance(4)) return std::to_string(pick(46000, 50000));       // multiplication overflow bait
    if (chance(2)) return std::to_string(2000000000 + pick(0, 9));  // addition overflow bait
    return std::to_string(pick(0, 20));
  }

  std::string expression(int depth) {
    if (depth >= 3 || chance(35)) return operand();
    int roll = pick(1, 100);
    if (roll <= 10) return "-" + term_like(depth + 1);
    std::string lhs = term_like(depth + 1);
    const char* op = nullptr;
    int which = pick(1, 10);
    if (which <= 4) op = " + ";
    else if (which <= 7) op = " - ";
    else if (which <= 9) op = " * ";
    else op = " / ";
    std::string rhs = (op[1] == '/') ? divisor(depth + 1) : term_like(depth + 1);
    return lhs + op + rhs;
  }

  std::string term_like(int depth) {
    if (depth >= 3 || chance(55)) return operand();
    return "(" + expression(depth) + ")";
  }

  // Mostly nonzero literals so division faults stay occasional.
  std::string divisor(int depth) {
    if (chance(75)) return std::to_string(pick(1, 9));
    return term_like(depth);
  }

  std::string condition() {
    if (chance(15)) return "odd " + expression(1);
    static const char* ops[] = {"=", "<>", "<", ">", "<=", ">="};
    return expression(1) + " " + ops[pick(0, 5)] + " " + expression(1);
  }

  std::mt19937 rng_;
  std::string out_;
  int indent_ = 0;
  int stmt_budget_ = 30;
  int proc_budget_ = 5;
  int name_counter_ = 0;
  int reads_ = 0;
  int loop_depth_ = 0;
  std::vector<Visible> visible_;
  std::vector<std::string> callable_;
};

}  // namespace

GeneratedProgram generate_program(std::uint32_t seed) { return Gen(seed).run(); }

std::vector<Token> generate_tokens(std::uint32_t seed, int count) {
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::vector<Token> tokens;
  tokens.reserve(static_cast<std::size_t>(count));
  int line = 1;
  for (int i = 0; i < count; ++i) {
    Token t;
    t.kind = static_cast<TokenKind>(pick(0, 31));
    if (pick(1, 100) <= 30) ++line;
    t.pos = {line, pick(1, 80)};
    if (t.kind == TokenKind::identifier) {
      int len = pick(1, 8);
      t.name.push_back(static_cast<char>('a' + pick(0, 25)));
      for (int j = 1; j < len; ++j) {
        int c = pick(0, 36);
        if (c < 26) t.name.push_back(static_cast<char>('a' + c));
        else if (c < 36) t.name.push_back(static_cast<char>('0' + c - 26));
        else t.name.push_back('_');
      }
      t.length = static_cast<int>(t.name.size());
    } else if (t.kind == TokenKind::number) {
      t.value = pick(1, 100) <= 80 ? pick(0, 99999)
                                   : static_cast<std::int32_t>(
                                         std::uniform_int_distribution<std::int64_t>(0, 2147483647)(rng));
      t.length = static_cast<int>(std::to_string(t.value).size());
    } else {
      t.length = static_cast<int>(token_lexeme(t.kind).size());
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::vector<std::int32_t> generate_input(std::uint32_t seed, int read_count) {
  std::mt19937 rng(seed ^ 0x9e3779b9u);
  std::vector<std::int32_t> input;
  input.reserve(static_cast<std::size_t>(read_count));
  for (int i = 0; i < read_count; ++i) {
    input.push_back(std::uniform_int_distribution<std::int32_t>(-50, 50)(rng));
  }
  return input;
}

}  // namespace pl0plus::testsup
