#ifndef PL0PLUS_DIAGNOSTICS_HPP
#define PL0PLUS_DIAGNOSTICS_HPP

#include <string>
#include <vector>

namespace pl0plus {

/// 1-based position of a character in the source text.
struct SourcePos {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class Severity { error, warning };

/// The compiler phase a diagnostic originates from. The short codes double
/// as the phase names on the command line and in rendered diagnostics.
enum class Phase { lex, sin, sem, gen };

const char* phase_name(Phase phase);

struct Diagnostic {
  Severity severity = Severity::error;
  Phase phase = Phase::lex;
  SourcePos pos;
  int length = 0;  // characters; 0 when the diagnostic has no extent
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Accumulates errors and warnings across phases.
///
/// Both lists stay sorted by (line, column); reports with equal positions
/// keep their insertion order. At most one diagnostic is retained per
/// (line, phase): once any error or warning is registered for a line and a
/// phase, later reports for that same line and phase are dropped, whatever
/// their severity.
class DiagnosticLog {
 public:
  /// Returns true if the diagnostic was retained, false if it was dropped
  /// by the one-per-line-and-phase rule.
  bool report(const Diagnostic& d);

  bool error(Phase phase, SourcePos pos, int length, std::string message);
  bool warning(Phase phase, SourcePos pos, int length, std::string message);

  const std::vector<Diagnostic>& errors() const { return errors_; }
  const std::vector<Diagnostic>& warnings() const { return warnings_; }

  bool has_errors() const { return !errors_.empty(); }
  bool empty() const { return errors_.empty() && warnings_.empty(); }

  /// Merges another log into this one, one report at a time, so the
  /// ordering and dedupe rules apply across the merge.
  void absorb(const DiagnosticLog& other);

 private:
  bool occupied(int line, Phase phase) const;

  std::vector<Diagnostic> errors_;
  std::vector<Diagnostic> warnings_;
};

/// One diagnostic per line, errors first:
///   ERROR|AVISO [fase] linea:columna mensaje
std::string render_text(const DiagnosticLog& log);

/// A <diagnosticos> document with one <error/> or <advertencia/> element per
/// diagnostic, attributes fase, linea, columna, longitud, mensaje.
std::string render_xml(const DiagnosticLog& log);

}  // namespace pl0plus

#endif
