#ifndef PL0PLUS_SYMBOLS_HPP
#define PL0PLUS_SYMBOLS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pl0plus/diagnostics.hpp"

namespace pl0plus {

enum class SymbolKind { block, constant, variable };

/// The structured scope-path code assigned to every declaration.
///
/// Textual form: kind prefix (b/c/v), the nesting path joined by '/', then
/// '_' and the per-kind correlative. The main block is the single code
/// without a correlative, "b0". A child block's path is its parent's path
/// followed by the parent's correlative, so "v0/2/0/2_1" reads: second
/// variable (correlative 1) of the block whose own code is "b0/2/0_2".
struct SymbolCode {
  SymbolKind kind = SymbolKind::block;
  std::vector<int> path;
  std::optional<int> correlative;  // absent only for the main block

  std::string text() const;
  static std::optional<SymbolCode> parse(std::string_view text);

  /// Nesting level of the declaring block (main block = 0).
  int declaring_level() const { return static_cast<int>(path.size()) - 1; }

  static SymbolCode main_block() { return {SymbolKind::block, {0}, std::nullopt}; }

  friend bool operator==(const SymbolCode&, const SymbolCode&) = default;
};

inline std::string code_text(const SymbolCode& code) { return code.text(); }

struct SymbolEntry {
  std::string name;
  SymbolKind kind = SymbolKind::variable;
  SymbolCode code;
  std::int32_t const_value = 0;  // constants only
  int var_index = 0;             // variables only: declaration order in block
  SourcePos decl_pos;
};

/// Stack of open scopes, innermost last. Each scope maps names declared in
/// one block; lookup walks outward and permits shadowing.
class ScopeChain {
 public:
  struct Resolution {
    SymbolEntry entry;
    int level_difference = 0;  // block levels between use site and declaration
  };

  /// Opens a scope for a block with the given code. Returns the scope level
  /// (main block = 0).
  int push(const SymbolCode& block_code);
  void pop();

  /// Declares a name in the innermost scope. Fails (returns false) when the
  /// name already exists in that scope, leaving the first declaration in
  /// place.
  bool declare(const SymbolEntry& entry);

  std::optional<Resolution> resolve(std::string_view name) const;

  /// Marks the innermost visible entry for the name as referenced.
  void mark_used(std::string_view name);

  /// Names declared in the innermost scope that were never resolved,
  /// restricted to the given kind, in declaration order.
  std::vector<SymbolEntry> unused_in_current_scope(SymbolKind kind) const;

  const SymbolCode& current_block_code() const;
  /// Path that declarations made in the innermost scope receive.
  const std::vector<int>& current_child_path() const;
  int depth() const { return static_cast<int>(scopes_.size()); }

  /// Next per-kind correlative for the innermost scope (0-based, counts up).
  int take_correlative(SymbolKind kind);

 private:
  struct Scope {
    SymbolCode block_code;
    std::vector<int> child_path;
    std::vector<std::pair<SymbolEntry, bool>> entries;  // entry, used flag
    int counters[3] = {0, 0, 0};                        // per SymbolKind
  };
  std::vector<Scope> scopes_;
};

std::optional<ScopeChain::Resolution> resolve(std::string_view name,
                                              const ScopeChain& scopes);

}  // namespace pl0plus

#endif
