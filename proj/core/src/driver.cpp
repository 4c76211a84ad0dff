#include "pl0plus/driver.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "pl0plus/codegen.hpp"
#include "pl0plus/lexer.hpp"
#include "pl0plus/parser.hpp"
#include "pl0plus/semantics.hpp"
#include "pl0plus/xmlio.hpp"

namespace pl0plus {

std::optional<std::size_t> PhaseRegistry::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    if (phases_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::string> PhaseRegistry::register_phase(PhaseDescriptor descriptor,
                                                         std::size_t position) {
  if (position > phases_.size()) return "posición de fase inválida";
  if (descriptor.name.empty()) return "la fase necesita un nombre";
  if (!descriptor.translate) return "la fase necesita una función de traducción";
  if (index_of(descriptor.name))
    return "nombre de fase duplicado: " + descriptor.name;
  if (position > 0 &&
      descriptor.input_extension != phases_[position - 1].output_extension) {
    return "la extensión de entrada " + descriptor.input_extension +
           " no empalma con la fase " + phases_[position - 1].name;
  }
  if (position < phases_.size() &&
      descriptor.output_extension != phases_[position].input_extension) {
    return "la extensión de salida " + descriptor.output_extension +
           " no empalma con la fase " + phases_[position].name;
  }
  phases_.insert(phases_.begin() + static_cast<std::ptrdiff_t>(position),
                 std::move(descriptor));
  return std::nullopt;
}

PhaseRegistry default_registry() {
  PhaseRegistry registry;
  registry.register_phase(
      PhaseDescriptor{
          "lex", ".pl0+", ".pl0+lex", "análisis léxico",
          [](PhaseIr input, DiagnosticLog& log) -> PhaseIr {
            auto* source = std::get_if<std::string>(&input);
            if (!source) return std::monostate{};
            LexResult result = tokenize(*source);
            log.absorb(result.log);
            return std::move(result.tokens);
          }},
      0);
  registry.register_phase(
      PhaseDescriptor{
          "sin", ".pl0+lex", ".pl0+sin", "análisis sintáctico",
          [](PhaseIr input, DiagnosticLog& log) -> PhaseIr {
            auto* tokens = std::get_if<std::vector<Token>>(&input);
            if (!tokens) return std::monostate{};
            ParseResult result = parse(*tokens);
            log.absorb(result.log);
            return std::move(result.program);
          }},
      1);
  registry.register_phase(
      PhaseDescriptor{
          "sem", ".pl0+sin", ".pl0+sem", "análisis semántico",
          [](PhaseIr input, DiagnosticLog& log) -> PhaseIr {
            auto* program = std::get_if<Program>(&input);
            if (!program) return std::monostate{};
            AnalysisResult result = analyze(*program);
            log.absorb(result.log);
            return std::move(*program);
          }},
      2);
  registry.register_phase(
      PhaseDescriptor{
          "gen", ".pl0+sem", ".p+", "generación de código",
          [](PhaseIr input, DiagnosticLog& log) -> PhaseIr {
            auto* program = std::get_if<Program>(&input);
            if (!program) return std::monostate{};
            // Generation needs a clean annotated tree; earlier errors mean
            // there is nothing meaningful to emit.
            if (log.has_errors()) return std::monostate{};
            GenResult result = generate(*program);
            log.absorb(result.log);
            return std::move(result.code);
          }},
      3);
  return registry;
}

ParsedArgs parse_args(const std::vector<std::string>& args,
                      const PhaseRegistry& registry) {
  ParsedArgs parsed;
  std::vector<bool> selected(registry.size(), false);
  bool any_phase = false;
  std::string input_path;

  for (const std::string& arg : args) {
    if (arg == "-a" || arg == "--ayuda") {
      parsed.kind = ParsedArgs::Kind::help;
      return parsed;
    }
    if (arg == "-m" || arg == "--mostrar") {
      parsed.plan.show = true;
      continue;
    }
    if (arg == "-e" || arg == "--errores-xml") {
      parsed.plan.errors_as_xml = true;
      continue;
    }
    if (arg.starts_with("--")) {
      auto index = registry.index_of(std::string_view(arg).substr(2));
      if (!index) {
        parsed.message = "opción desconocida: " + arg;
        return parsed;
      }
      selected[*index] = true;
      any_phase = true;
      continue;
    }
    if (arg.starts_with("-") && arg.size() > 1) {
      parsed.message = "opción desconocida: " + arg;
      return parsed;
    }
    if (!input_path.empty()) {
      parsed.message = "más de un archivo de entrada: " + arg;
      return parsed;
    }
    input_path = arg;
  }

  if (input_path.empty()) {
    parsed.message = "falta el archivo de entrada";
    return parsed;
  }
  if (!any_phase) selected.assign(registry.size(), true);

  std::size_t first = registry.size();
  std::size_t last = 0;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (!selected[i]) continue;
    if (first == registry.size()) first = i;
    last = i;
  }
  for (std::size_t i = first; i <= last; ++i) {
    if (!selected[i]) {
      parsed.message = "las fases seleccionadas no son contiguas";
      return parsed;
    }
  }

  const std::string& input_extension = registry.at(first).input_extension;
  if (!input_path.ends_with(input_extension) ||
      input_path.size() == input_extension.size()) {
    parsed.message = "el archivo " + input_path + " no tiene la extensión " +
                     input_extension + " que requiere la fase " +
                     registry.at(first).name;
    return parsed;
  }

  parsed.kind = ParsedArgs::Kind::plan;
  parsed.plan.first_phase = first;
  parsed.plan.last_phase = last;
  parsed.plan.input_path = input_path;
  parsed.plan.output_path =
      input_path.substr(0, input_path.size() - input_extension.size()) +
      registry.at(last).output_extension;
  return parsed;
}

std::string help_text(std::string_view program_name, const PhaseRegistry& registry) {
  std::ostringstream out;
  out << "uso: " << program_name << " [-a] [-m] [-e]";
  for (const PhaseDescriptor& phase : registry.phases()) out << " [--" << phase.name << "]";
  out << " archivo\n\n";
  out << "Compilador de pl0+. Ejecuta las fases seleccionadas (todas si no se\n"
         "indica ninguna) en el orden del registro y escribe únicamente el\n"
         "archivo de salida de la última fase.\n\n";
  out << "opciones:\n";
  out << "  -a, --ayuda        muestra esta ayuda y termina\n";
  out << "  -m, --mostrar      muestra el resultado del proceso en la pantalla\n";
  out << "  -e, --errores-xml  reporta los diagnósticos en formato XML\n";
  for (const PhaseDescriptor& phase : registry.phases()) {
    std::string flag = "--" + phase.name;
    out << "  " << flag << std::string(flag.size() < 17 ? 19 - flag.size() : 2, ' ')
        << phase.description << " (" << phase.input_extension << " -> "
        << phase.output_extension << ")\n";
  }
  return out.str();
}

namespace {

std::optional<XmlDocumentKind> document_kind_for(const std::string& extension) {
  if (extension == ".pl0+lex") return XmlDocumentKind::lex;
  if (extension == ".pl0+sin") return XmlDocumentKind::sin;
  if (extension == ".pl0+sem") return XmlDocumentKind::sem;
  return std::nullopt;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return in.good() || in.eof();
}

// Deserializes the input file into the IR the first phase expects; the
// extension decides the decoder.
std::optional<PhaseIr> load_input(const std::string& path,
                                  const std::string& extension, DiagnosticLog& log,
                                  std::string& io_error) {
  std::string text;
  if (!read_file(path, text)) {
    io_error = "no se puede leer el archivo: " + path;
    return std::nullopt;
  }
  if (extension == ".pl0+") return PhaseIr{std::move(text)};
  if (extension == ".p+") {
    ObjectParseResult result = parse_object_text(text);
    log.absorb(result.log);
    return PhaseIr{std::move(result.code)};
  }
  if (auto kind = document_kind_for(extension)) {
    if (*kind == XmlDocumentKind::lex) {
      ReadTokensResult result = read_tokens(text);
      log.absorb(result.log);
      return PhaseIr{std::move(result.tokens)};
    }
    ReadTreeResult result = read_tree(text, *kind);
    log.absorb(result.log);
    return PhaseIr{std::move(result.program)};
  }
  io_error = "extensión de entrada desconocida: " + extension;
  return std::nullopt;
}

std::optional<std::string> serialize_ir(const PhaseIr& ir, const std::string& extension) {
  if (extension == ".pl0+") {
    if (const auto* text = std::get_if<std::string>(&ir)) return *text;
    return std::nullopt;
  }
  if (extension == ".p+") {
    if (const auto* code = std::get_if<std::vector<Instruction>>(&ir))
      return render_object_text(*code);
    return std::nullopt;
  }
  auto kind = document_kind_for(extension);
  if (!kind) return std::nullopt;
  if (*kind == XmlDocumentKind::lex) {
    if (const auto* tokens = std::get_if<std::vector<Token>>(&ir))
      return write_tokens(*tokens);
    return std::nullopt;
  }
  if (const auto* program = std::get_if<Program>(&ir))
    return write_tree(*program, *kind);
  return std::nullopt;
}

void emit_diagnostics(const DiagnosticLog& log, bool as_xml, std::ostream& err) {
  if (log.empty()) return;
  err << (as_xml ? render_xml(log) : render_text(log));
}

}  // namespace

int run_pipeline(const RunPlan& plan, const PhaseRegistry& registry,
                 std::ostream& out, std::ostream& err) {
  DiagnosticLog log;
  std::string io_error;
  auto ir = load_input(plan.input_path, registry.at(plan.first_phase).input_extension,
                       log, io_error);
  if (!ir) {
    err << io_error << '\n';
    return 2;
  }
  if (log.has_errors()) {
    emit_diagnostics(log, plan.errors_as_xml, err);
    return 2;
  }

  for (std::size_t i = plan.first_phase; i <= plan.last_phase; ++i)
    *ir = registry.at(i).translate(std::move(*ir), log);

  emit_diagnostics(log, plan.errors_as_xml, err);
  if (log.has_errors()) return 1;

  auto rendered = serialize_ir(*ir, registry.at(plan.last_phase).output_extension);
  if (!rendered) {
    err << "error interno: la fase no produjo un resultado serializable\n";
    return 2;
  }
  std::ofstream output(plan.output_path, std::ios::binary);
  if (!output || !(output << *rendered) || !output.flush()) {
    err << "no se puede escribir el archivo: " << plan.output_path << '\n';
    return 2;
  }
  if (plan.show) out << *rendered;
  return 0;
}

int run_compiler_cli(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err, const PhaseRegistry& registry) {
  ParsedArgs parsed = parse_args(args, registry);
  switch (parsed.kind) {
    case ParsedArgs::Kind::help:
      out << help_text("tradukilo", registry);
      return 0;
    case ParsedArgs::Kind::usage_error:
      err << "error: " << parsed.message << '\n';
      err << help_text("tradukilo", registry);
      return 2;
    case ParsedArgs::Kind::plan:
      return run_pipeline(parsed.plan, registry, out, err);
  }
  return 2;
}

int run_compiler_cli(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err) {
  return run_compiler_cli(args, out, err, default_registry());
}

}  // namespace pl0plus
