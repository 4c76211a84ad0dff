#include "pl0plus/symbols.hpp"

#include <cassert>
#include <charconv>

namespace pl0plus {

std::string SymbolCode::text() const {
  std::string out;
  switch (kind) {
    case SymbolKind::block: out = "b"; break;
    case SymbolKind::constant: out = "c"; break;
    case SymbolKind::variable: out = "v"; break;
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '/';
    out += std::to_string(path[i]);
  }
  if (correlative) {
    out += '_';
    out += std::to_string(*correlative);
  }
  return out;
}

std::optional<SymbolCode> SymbolCode::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  SymbolCode code;
  switch (text[0]) {
    case 'b': code.kind = SymbolKind::block; break;
    case 'c': code.kind = SymbolKind::constant; break;
    case 'v': code.kind = SymbolKind::variable; break;
    default: return std::nullopt;
  }
  text.remove_prefix(1);

  auto read_int = [](std::string_view& s, int& out) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr == begin || out < 0) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - begin));
    return true;
  };

  int value = 0;
  if (!read_int(text, value)) return std::nullopt;
  code.path.push_back(value);
  while (!text.empty() && text[0] == '/') {
    text.remove_prefix(1);
    if (!read_int(text, value)) return std::nullopt;
    code.path.push_back(value);
  }
  if (!text.empty()) {
    if (text[0] != '_') return std::nullopt;
    text.remove_prefix(1);
    if (!read_int(text, value) || !text.empty()) return std::nullopt;
    code.correlative = value;
  }
  // Only the main block may omit the correlative.
  if (!code.correlative && code != main_block()) return std::nullopt;
  return code;
}

int ScopeChain::push(const SymbolCode& block_code) {
  Scope scope;
  scope.block_code = block_code;
  scope.child_path = block_code.path;
  if (block_code.correlative) scope.child_path.push_back(*block_code.correlative);
  scopes_.push_back(std::move(scope));
  return static_cast<int>(scopes_.size()) - 1;
}

void ScopeChain::pop() {
  assert(!scopes_.empty());
  scopes_.pop_back();
}

bool ScopeChain::declare(const SymbolEntry& entry) {
  assert(!scopes_.empty());
  Scope& scope = scopes_.back();
  for (const auto& [existing, used] : scope.entries) {
    if (existing.name == entry.name) return false;
  }
  scope.entries.emplace_back(entry, false);
  return true;
}

std::optional<ScopeChain::Resolution> ScopeChain::resolve(std::string_view name) const {
  for (auto scope = scopes_.rbegin(); scope != scopes_.rend(); ++scope) {
    for (const auto& [entry, used] : scope->entries) {
      if (entry.name == name) {
        int use_level = static_cast<int>(scopes_.size()) - 1;
        int decl_level =
            static_cast<int>(scopes_.size()) - 1 -
            static_cast<int>(std::distance(scopes_.rbegin(), scope));
        return Resolution{entry, use_level - decl_level};
      }
    }
  }
  return std::nullopt;
}

void ScopeChain::mark_used(std::string_view name) {
  for (auto scope = scopes_.rbegin(); scope != scopes_.rend(); ++scope) {
    for (auto& [entry, used] : scope->entries) {
      if (entry.name == name) {
        used = true;
        return;
      }
    }
  }
}

std::vector<SymbolEntry> ScopeChain::unused_in_current_scope(SymbolKind kind) const {
  assert(!scopes_.empty());
  std::vector<SymbolEntry> out;
  for (const auto& [entry, used] : scopes_.back().entries) {
    if (entry.kind == kind && !used) out.push_back(entry);
  }
  return out;
}

const SymbolCode& ScopeChain::current_block_code() const {
  assert(!scopes_.empty());
  return scopes_.back().block_code;
}

const std::vector<int>& ScopeChain::current_child_path() const {
  assert(!scopes_.empty());
  return scopes_.back().child_path;
}

int ScopeChain::take_correlative(SymbolKind kind) {
  assert(!scopes_.empty());
  return scopes_.back().counters[static_cast<int>(kind)]++;
}

std::optional<ScopeChain::Resolution> resolve(std::string_view name,
                                              const ScopeChain& scopes) {
  return scopes.resolve(name);
}

}  // namespace pl0plus
