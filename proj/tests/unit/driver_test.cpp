#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "pipeline.hpp"
#include "scratch_dir.hpp"
#include "pl0plus/driver.hpp"
#include "pl0plus/isa.hpp"
#include "pl0plus/lexer.hpp"
#include "pl0plus/parser.hpp"
#include "pl0plus/xmlio.hpp"

using namespace pl0plus;
using testsup::ScratchDir;

namespace {

const PhaseRegistry& stock() {
  static PhaseRegistry registry = default_registry();
  return registry;
}

ParsedArgs args_of(std::vector<std::string> argv) {
  return parse_args(argv, stock());
}

PhaseDescriptor pass_through(std::string name, std::string extension) {
  return PhaseDescriptor{std::move(name), extension, std::move(extension),
                         "sin cambios",
                         [](PhaseIr ir, DiagnosticLog&) { return ir; }};
}

struct CliRun {
  int exit;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> argv, const PhaseRegistry& registry) {
  std::ostringstream out;
  std::ostringstream err;
  int exit = run_compiler_cli(argv, out, err, registry);
  return {exit, out.str(), err.str()};
}

CliRun cli(std::vector<std::string> argv) { return cli(std::move(argv), stock()); }

const char* kFibonacci =
    "var n, a, b, t;\n"
    "begin\n"
    "  read n;\n"
    "  a := 1; b := 2;\n"
    "  while n > 0 do\n"
    "  begin\n"
    "    write a;\n"
    "    t := a + b; a := b; b := t;\n"
    "    n := n - 1\n"
    "  end\n"
    "end.\n";

}  // namespace

TEST_CASE("the stock registry chains four phases") {
  const PhaseRegistry& registry = stock();
  REQUIRE(registry.size() == 4);
  CHECK(registry.at(0).name == "lex");
  CHECK(registry.at(1).name == "sin");
  CHECK(registry.at(2).name == "sem");
  CHECK(registry.at(3).name == "gen");
  for (std::size_t i = 1; i < registry.size(); ++i)
    CHECK(registry.at(i).input_extension == registry.at(i - 1).output_extension);
  CHECK(registry.index_of("sem") == 2);
  CHECK_FALSE(registry.index_of("opt").has_value());
}

TEST_CASE("no phase flags selects the whole chain") {
  ParsedArgs parsed = args_of({"programa.pl0+"});
  REQUIRE(parsed.kind == ParsedArgs::Kind::plan);
  CHECK(parsed.plan.first_phase == 0);
  CHECK(parsed.plan.last_phase == 3);
  CHECK(parsed.plan.output_path == "programa.p+");
  CHECK_FALSE(parsed.plan.show);
  CHECK_FALSE(parsed.plan.errors_as_xml);
}

TEST_CASE("phase selections map to input and output extensions") {
  struct Case {
    std::vector<std::string> argv;
    std::size_t first;
    std::size_t last;
    const char* output;
  };
  const Case cases[] = {
      {{"--lex", "programa.pl0+"}, 0, 0, "programa.pl0+lex"},
      {{"--lex", "--sin", "programa.pl0+"}, 0, 1, "programa.pl0+sin"},
      {{"programa.pl0+", "--lex", "--sin", "--sem"}, 0, 2, "programa.pl0+sem"},
      {{"programa.pl0+lex", "--sin", "--sem"}, 1, 2, "programa.pl0+sem"},
      {{"programa.pl0+sin", "--sem", "--gen"}, 2, 3, "programa.p+"},
      {{"--sin", "--lex", "programa.pl0+"}, 0, 1, "programa.pl0+sin"},
      {{"--gen", "programa.pl0+sem"}, 3, 3, "programa.p+"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.output);
    ParsedArgs parsed = args_of(c.argv);
    REQUIRE(parsed.kind == ParsedArgs::Kind::plan);
    CHECK(parsed.plan.first_phase == c.first);
    CHECK(parsed.plan.last_phase == c.last);
    CHECK(parsed.plan.output_path == c.output);
  }
}

TEST_CASE("the output lands next to the input") {
  ParsedArgs parsed = args_of({"dir/sub/prog.pl0+", "--lex"});
  REQUIRE(parsed.kind == ParsedArgs::Kind::plan);
  CHECK(parsed.plan.output_path == "dir/sub/prog.pl0+lex");
}

TEST_CASE("usage errors") {
  auto message_of = [](std::vector<std::string> argv) {
    ParsedArgs parsed = args_of(std::move(argv));
    REQUIRE(parsed.kind == ParsedArgs::Kind::usage_error);
    return parsed.message;
  };
  CHECK(message_of({"--lex", "--sem", "programa.pl0+"}) ==
        "las fases seleccionadas no son contiguas");
  CHECK(message_of({"--lex", "--gen", "programa.pl0+"}) ==
        "las fases seleccionadas no son contiguas");
  CHECK(message_of({"--sin", "programa.pl0+"}) ==
        "el archivo programa.pl0+ no tiene la extensión .pl0+lex que requiere la fase sin");
  CHECK(message_of({"programa.txt"}) ==
        "el archivo programa.txt no tiene la extensión .pl0+ que requiere la fase lex");
  CHECK(message_of({".pl0+"}) ==
        "el archivo .pl0+ no tiene la extensión .pl0+ que requiere la fase lex");
  CHECK(message_of({"--foo", "programa.pl0+"}) == "opción desconocida: --foo");
  CHECK(message_of({"-z", "programa.pl0+"}) == "opción desconocida: -z");
  CHECK(message_of({"a.pl0+", "b.pl0+"}) == "más de un archivo de entrada: b.pl0+");
  CHECK(message_of({"-m"}) == "falta el archivo de entrada");
}

TEST_CASE("help wins over everything else") {
  ParsedArgs parsed = args_of({"--foo", "-a"});
  CHECK(parsed.kind == ParsedArgs::Kind::usage_error);  // order matters: --foo first
  parsed = args_of({"-a", "--foo"});
  CHECK(parsed.kind == ParsedArgs::Kind::help);
  parsed = args_of({"--ayuda"});
  CHECK(parsed.kind == ParsedArgs::Kind::help);
}

TEST_CASE("display flags are recognized in both spellings") {
  ParsedArgs parsed = args_of({"-m", "-e", "programa.pl0+"});
  REQUIRE(parsed.kind == ParsedArgs::Kind::plan);
  CHECK(parsed.plan.show);
  CHECK(parsed.plan.errors_as_xml);
  parsed = args_of({"--mostrar", "--errores-xml", "programa.pl0+"});
  REQUIRE(parsed.kind == ParsedArgs::Kind::plan);
  CHECK(parsed.plan.show);
  CHECK(parsed.plan.errors_as_xml);
}

TEST_CASE("registering a phase validates the splice") {
  PhaseRegistry registry = default_registry();
  CHECK(registry.register_phase(pass_through("opt", ".pl0+sem"), 9) ==
        "posición de fase inválida");
  CHECK(registry.register_phase(pass_through("", ".pl0+sem"), 3) ==
        "la fase necesita un nombre");
  PhaseDescriptor no_fn = pass_through("opt", ".pl0+sem");
  no_fn.translate = nullptr;
  CHECK(registry.register_phase(std::move(no_fn), 3) ==
        "la fase necesita una función de traducción");
  CHECK(registry.register_phase(pass_through("sem", ".pl0+sem"), 3) ==
        "nombre de fase duplicado: sem");
  CHECK(registry.register_phase(pass_through("opt", ".foo"), 3) ==
        "la extensión de entrada .foo no empalma con la fase sem");
  PhaseDescriptor bad_out = pass_through("opt", ".pl0+sem");
  bad_out.output_extension = ".bar";
  CHECK(registry.register_phase(std::move(bad_out), 3) ==
        "la extensión de salida .bar no empalma con la fase gen");
  CHECK(registry.size() == 4);  // every rejection left it untouched

  CHECK_FALSE(registry.register_phase(pass_through("opt", ".pl0+sem"), 3).has_value());
  REQUIRE(registry.size() == 5);
  CHECK(registry.index_of("opt") == 3);
  CHECK(registry.index_of("gen") == 4);
}

TEST_CASE("a spliced pass-through phase leaves the output byte-identical") {
  PhaseRegistry extended = default_registry();
  REQUIRE_FALSE(extended.register_phase(pass_through("opt", ".pl0+sem"), 3).has_value());

  ScratchDir dir;
  dir.write("a.pl0+", kFibonacci);
  dir.write("b.pl0+", kFibonacci);
  CHECK(cli({dir.file("a.pl0+")}, stock()).exit == 0);
  CHECK(cli({dir.file("b.pl0+")}, extended).exit == 0);
  std::string stock_code = dir.read("a.p+");
  CHECK_FALSE(stock_code.empty());
  CHECK(stock_code == dir.read("b.p+"));

  // the new flag works on its own
  CHECK(cli({"--lex", "--sin", "--sem", dir.file("a.pl0+")}, stock()).exit == 0);
  std::string sem_doc = dir.read("a.pl0+sem");
  dir.write("c.pl0+sem", sem_doc);
  CHECK(cli({"--opt", dir.file("c.pl0+sem")}, extended).exit == 0);
  CHECK(dir.read("c.pl0+sem") == sem_doc);
}

TEST_CASE("a phase appended after gen reads and rewrites object text") {
  PhaseRegistry extended = default_registry();
  REQUIRE_FALSE(extended.register_phase(pass_through("verificar", ".p+"), 4).has_value());

  ScratchDir dir;
  dir.write("f.pl0+", kFibonacci);
  REQUIRE(cli({dir.file("f.pl0+")}, stock()).exit == 0);
  std::string object_text = dir.read("f.p+");

  CHECK(cli({"--verificar", dir.file("f.p+")}, extended).exit == 0);
  CHECK(dir.read("f.p+") == object_text);
}

TEST_CASE("a clean run writes the output file and only that") {
  ScratchDir dir;
  dir.write("f.pl0+", kFibonacci);
  CliRun run = cli({dir.file("f.pl0+")});
  CHECK(run.exit == 0);
  CHECK(run.out.empty());
  CHECK(run.err.empty());
  REQUIRE(dir.exists("f.p+"));
  CHECK_FALSE(dir.exists("f.pl0+lex"));
  CHECK_FALSE(dir.exists("f.pl0+sin"));
  CHECK_FALSE(dir.exists("f.pl0+sem"));

  ObjectParseResult loaded = parse_object_text(dir.read("f.p+"));
  CHECK(loaded.log.empty());
  CHECK_FALSE(loaded.code.empty());
}

TEST_CASE("-m mirrors the written file to stdout") {
  ScratchDir dir;
  dir.write("f.pl0+", kFibonacci);
  CliRun run = cli({"-m", dir.file("f.pl0+")});
  CHECK(run.exit == 0);
  CHECK(run.out == dir.read("f.p+"));
}

TEST_CASE("diagnosed errors stop the pipeline") {
  ScratchDir dir;
  dir.write("mal.pl0+", "var x;\nbegin y := 1 end.\n");
  CliRun run = cli({dir.file("mal.pl0+")});
  CHECK(run.exit == 1);
  CHECK_FALSE(dir.exists("mal.p+"));
  CHECK(run.err.find("ERROR [sem]") != std::string::npos);
  CHECK(run.err.find("símbolo no declarado: y") != std::string::npos);
}

TEST_CASE("warnings alone do not stop the pipeline") {
  ScratchDir dir;
  dir.write("aviso.pl0+", "var x, sobra;\nx := 1.\n");
  CliRun run = cli({dir.file("aviso.pl0+")});
  CHECK(run.exit == 0);
  CHECK(dir.exists("aviso.p+"));
  CHECK(run.err.find("AVISO [sem]") != std::string::npos);
  CHECK(run.err.find("variable no utilizada: sobra") != std::string::npos);
}

TEST_CASE("-e renders diagnostics as a document") {
  ScratchDir dir;
  dir.write("mal.pl0+", "begin y := 1 end.\n");
  CliRun run = cli({"-e", dir.file("mal.pl0+")});
  CHECK(run.exit == 1);
  CHECK(run.err.starts_with("<diagnosticos>"));
  CHECK(run.err.find("símbolo no declarado: y") != std::string::npos);
}

TEST_CASE("a missing input is an I/O error, exit 2") {
  ScratchDir dir;
  CliRun run = cli({dir.file("nada.pl0+")});
  CHECK(run.exit == 2);
  CHECK(run.err.find("no se puede leer el archivo: ") != std::string::npos);
}

TEST_CASE("a corrupt intermediate file is rejected before any phase runs") {
  ScratchDir dir;
  dir.write("g.pl0+lex", "this is not xml");
  CliRun run = cli({"--sin", dir.file("g.pl0+lex")});
  CHECK(run.exit == 2);
  CHECK(run.err.find("documento XML inválido") != std::string::npos);
  CHECK_FALSE(dir.exists("g.pl0+sin"));
}

TEST_CASE("staged runs equal the single-shot run byte for byte") {
  ScratchDir dir;
  dir.write("uno.pl0+", kFibonacci);
  dir.write("dos.pl0+", kFibonacci);

  REQUIRE(cli({dir.file("uno.pl0+")}).exit == 0);

  REQUIRE(cli({"--lex", dir.file("dos.pl0+")}).exit == 0);
  REQUIRE(cli({"--sin", dir.file("dos.pl0+lex")}).exit == 0);
  REQUIRE(cli({"--sem", dir.file("dos.pl0+sin")}).exit == 0);
  REQUIRE(cli({"--gen", dir.file("dos.pl0+sem")}).exit == 0);

  CHECK(dir.read("uno.p+") == dir.read("dos.p+"));
}

TEST_CASE("a hand-written tree document feeds the back half of the chain") {
  LexResult lexed = tokenize("var x;\nbegin read x; write x end.");
  REQUIRE(lexed.log.empty());
  ParseResult parsed = parse(lexed.tokens);
  REQUIRE(parsed.log.empty());

  ScratchDir dir;
  dir.write("mano.pl0+sin", write_tree(parsed.program, XmlDocumentKind::sin));
  CliRun run = cli({"--sem", "--gen", dir.file("mano.pl0+sin")});
  CHECK(run.exit == 0);
  REQUIRE(dir.exists("mano.p+"));

  testsup::Compiled direct = testsup::compile_source("var x;\nbegin read x; write x end.");
  REQUIRE(direct.log.errors().empty());
  CHECK(dir.read("mano.p+") == render_object_text(direct.gen.code));
}

TEST_CASE("the cli prints help and usage errors") {
  CliRun help = cli({"-a"});
  CHECK(help.exit == 0);
  CHECK(help.out.starts_with("uso: tradukilo"));
  CHECK(help.out.find("--gen") != std::string::npos);
  CHECK(help.err.empty());

  CliRun usage = cli({"--lex", "--sem", "x.pl0+"});
  CHECK(usage.exit == 2);
  CHECK(usage.err.starts_with("error: las fases seleccionadas no son contiguas"));
  CHECK(usage.err.find("uso: tradukilo") != std::string::npos);
}
