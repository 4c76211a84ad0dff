#ifndef PL0PLUS_DRIVER_HPP
#define PL0PLUS_DRIVER_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pl0plus/ast.hpp"
#include "pl0plus/diagnostics.hpp"
#include "pl0plus/isa.hpp"
#include "pl0plus/token.hpp"

namespace pl0plus {

/// The value passed between phases: source text, a token list, a (possibly
/// annotated) tree, or object code.
using PhaseIr =
    std::variant<std::monostate, std::string, std::vector<Token>, Program,
                 std::vector<Instruction>>;

/// One registered compilation phase. `translate` consumes the previous
/// phase's IR and appends its diagnostics to the shared log.
struct PhaseDescriptor {
  std::string name;              // doubles as the --<name> flag
  std::string input_extension;   // ".pl0+", ".pl0+lex", ...
  std::string output_extension;
  std::string description;
  std::function<PhaseIr(PhaseIr, DiagnosticLog&)> translate;
};

/// Ordered list of available phases. The stock registry is
/// [lex, sin, sem, gen]; extra phases can be inserted anywhere as long as
/// their extensions splice into the chain.
class PhaseRegistry {
 public:
  const std::vector<PhaseDescriptor>& phases() const { return phases_; }
  const PhaseDescriptor& at(std::size_t index) const { return phases_[index]; }
  std::size_t size() const { return phases_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Inserts at `position` (0..size). Fails (returning the problem and
  /// leaving the registry untouched) on duplicate names or when the
  /// descriptor's extensions do not match its new neighbours.
  std::optional<std::string> register_phase(PhaseDescriptor descriptor,
                                            std::size_t position);

 private:
  std::vector<PhaseDescriptor> phases_;
};

PhaseRegistry default_registry();

struct RunPlan {
  std::size_t first_phase = 0;  // indices into the registry, inclusive
  std::size_t last_phase = 0;
  std::string input_path;
  std::string output_path;
  bool show = false;            // -m: print the result to stdout too
  bool errors_as_xml = false;   // -e: diagnostics as XML on stderr
};

struct ParsedArgs {
  enum class Kind { plan, help, usage_error };
  Kind kind = Kind::usage_error;
  RunPlan plan;
  std::string message;  // usage error text
};

/// Parses the compiler command line: [-a] [-m] [-e] [--<phase>]... file.
/// Flag order is irrelevant; no phase flags selects every phase. Selected
/// phases must be contiguous in registry order and the input file's
/// extension must be the first phase's input extension.
ParsedArgs parse_args(const std::vector<std::string>& args,
                      const PhaseRegistry& registry);

std::string help_text(std::string_view program_name,
                      const PhaseRegistry& registry);

/// Runs the planned phases, threading one diagnostic log through them.
/// Writes only the final phase's file, and only when the log has no
/// errors. Diagnostics go to `err` (text, or a <diagnosticos> document
/// with errors_as_xml). Returns 0 on success, 1 when diagnostics contain
/// errors, 2 on unreadable input or malformed intermediate files.
int run_pipeline(const RunPlan& plan, const PhaseRegistry& registry,
                 std::ostream& out, std::ostream& err);

/// Full compiler entry point: parse_args + help/usage handling +
/// run_pipeline. Same exit codes, plus 2 for usage errors.
int run_compiler_cli(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err, const PhaseRegistry& registry);
int run_compiler_cli(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err);

}  // namespace pl0plus

#endif
