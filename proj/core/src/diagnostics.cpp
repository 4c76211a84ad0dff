#include "pl0plus/diagnostics.hpp"

#include <algorithm>
#include <sstream>

#include "pl0plus/xml.hpp"

namespace pl0plus {

const char* phase_name(Phase phase) {
  switch (phase) {
    case Phase::lex: return "lex";
    case Phase::sin: return "sin";
    case Phase::sem: return "sem";
    case Phase::gen: return "gen";
  }
  return "?";
}

bool DiagnosticLog::occupied(int line, Phase phase) const {
  auto same_slot = [&](const Diagnostic& d) {
    return d.pos.line == line && d.phase == phase;
  };
  return std::any_of(errors_.begin(), errors_.end(), same_slot) ||
         std::any_of(warnings_.begin(), warnings_.end(), same_slot);
}

bool DiagnosticLog::report(const Diagnostic& d) {
  if (occupied(d.pos.line, d.phase)) return false;

  auto& list = d.severity == Severity::error ? errors_ : warnings_;
  auto after = [](const Diagnostic& x, const Diagnostic& y) {
    if (x.pos.line != y.pos.line) return x.pos.line < y.pos.line;
    return x.pos.column < y.pos.column;
  };
  // Insert after every entry at the same or an earlier position, so reports
  // at one position keep their arrival order.
  auto it = std::upper_bound(list.begin(), list.end(), d, after);
  list.insert(it, d);
  return true;
}

bool DiagnosticLog::error(Phase phase, SourcePos pos, int length,
                          std::string message) {
  return report({Severity::error, phase, pos, length, std::move(message)});
}

bool DiagnosticLog::warning(Phase phase, SourcePos pos, int length,
                            std::string message) {
  return report({Severity::warning, phase, pos, length, std::move(message)});
}

void DiagnosticLog::absorb(const DiagnosticLog& other) {
  for (const auto& d : other.errors_) report(d);
  for (const auto& d : other.warnings_) report(d);
}

std::string render_text(const DiagnosticLog& log) {
  std::ostringstream out;
  auto emit = [&](const Diagnostic& d, const char* word) {
    out << word << " [" << phase_name(d.phase) << "] " << d.pos.line << ':'
        << d.pos.column << ' ' << d.message << '\n';
  };
  for (const auto& d : log.errors()) emit(d, "ERROR");
  for (const auto& d : log.warnings()) emit(d, "AVISO");
  return out.str();
}

std::string render_xml(const DiagnosticLog& log) {
  xml::Element root;
  root.name = "diagnosticos";
  auto append = [&](const Diagnostic& d, const char* tag) {
    xml::Element e;
    e.name = tag;
    e.set("fase", phase_name(d.phase));
    e.set("linea", std::to_string(d.pos.line));
    e.set("columna", std::to_string(d.pos.column));
    e.set("longitud", std::to_string(d.length));
    e.set("mensaje", d.message);
    root.children.push_back(std::move(e));
  };
  for (const auto& d : log.errors()) append(d, "error");
  for (const auto& d : log.warnings()) append(d, "advertencia");
  return xml::serialize(root);
}

}  // namespace pl0plus
