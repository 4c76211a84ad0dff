#include "doctest.h"

#include <string>

#include "pl0plus/diagnostics.hpp"
#include "pl0plus/xml.hpp"

using namespace pl0plus;

TEST_CASE("one diagnostic per line and phase, first report wins") {
  DiagnosticLog log;
  CHECK(log.error(Phase::sin, {4, 2}, 1, "primero"));
  CHECK_FALSE(log.error(Phase::sin, {4, 9}, 1, "segundo"));
  CHECK(log.error(Phase::lex, {4, 9}, 1, "otra fase"));
  CHECK(log.error(Phase::sin, {5, 1}, 1, "otra linea"));

  REQUIRE(log.errors().size() == 3);
  CHECK(log.errors()[0].message == "primero");
  CHECK(log.errors()[1].message == "otra fase");
  CHECK(log.errors()[2].message == "otra linea");
}

TEST_CASE("the dedupe rule spans severities") {
  DiagnosticLog log;
  CHECK(log.warning(Phase::sem, {7, 1}, 3, "aviso"));
  CHECK_FALSE(log.error(Phase::sem, {7, 5}, 1, "error tardio"));
  CHECK(log.errors().empty());
  REQUIRE(log.warnings().size() == 1);

  DiagnosticLog other;
  CHECK(other.error(Phase::sem, {7, 5}, 1, "error primero"));
  CHECK_FALSE(other.warning(Phase::sem, {7, 1}, 3, "aviso tardio"));
  CHECK(other.warnings().empty());
}

TEST_CASE("reports are kept sorted by position, stable on ties") {
  DiagnosticLog log;
  log.error(Phase::lex, {9, 4}, 1, "c");
  log.error(Phase::sin, {2, 8}, 1, "a");
  log.error(Phase::sem, {2, 8}, 1, "b");  // same position, later insertion
  log.error(Phase::gen, {2, 1}, 1, "antes");

  REQUIRE(log.errors().size() == 4);
  CHECK(log.errors()[0].message == "antes");
  CHECK(log.errors()[1].message == "a");
  CHECK(log.errors()[2].message == "b");
  CHECK(log.errors()[3].message == "c");
}

TEST_CASE("errors and warnings sort independently") {
  DiagnosticLog log;
  log.warning(Phase::sem, {1, 1}, 1, "w");
  log.error(Phase::sin, {8, 1}, 1, "e");
  CHECK(log.has_errors());
  CHECK_FALSE(log.empty());
  CHECK(log.errors()[0].message == "e");
  CHECK(log.warnings()[0].message == "w");
}

TEST_CASE("text rendering puts errors before warnings") {
  DiagnosticLog log;
  log.warning(Phase::sem, {1, 5}, 6, "variable no utilizada: x");
  log.error(Phase::sin, {3, 7}, 1, "se esperaba punto y coma");
  CHECK(render_text(log) ==
        "ERROR [sin] 3:7 se esperaba punto y coma\n"
        "AVISO [sem] 1:5 variable no utilizada: x\n");
}

TEST_CASE("empty log renders to nothing") {
  DiagnosticLog log;
  CHECK(render_text(log).empty());
  CHECK(log.empty());
}

TEST_CASE("xml rendering carries every attribute") {
  DiagnosticLog log;
  log.error(Phase::lex, {2, 6}, 1, "carácter inválido: '@'");
  log.warning(Phase::sem, {1, 5}, 4, "variable no utilizada: \"x\"");

  xml::ParseResult doc = xml::parse(render_xml(log));
  REQUIRE(doc.ok());
  CHECK(doc.root->name == "diagnosticos");
  REQUIRE(doc.root->children.size() == 2);

  const xml::Element& error = doc.root->children[0];
  CHECK(error.name == "error");
  CHECK(*error.attr("fase") == "lex");
  CHECK(*error.attr("linea") == "2");
  CHECK(*error.attr("columna") == "6");
  CHECK(*error.attr("longitud") == "1");
  CHECK(*error.attr("mensaje") == "carácter inválido: '@'");

  const xml::Element& warning = doc.root->children[1];
  CHECK(warning.name == "advertencia");
  CHECK(*warning.attr("mensaje") == "variable no utilizada: \"x\"");
}

TEST_CASE("absorb applies the dedupe rule across logs") {
  DiagnosticLog base;
  base.error(Phase::sin, {3, 1}, 1, "mio");

  DiagnosticLog incoming;
  incoming.error(Phase::sin, {3, 9}, 1, "duplicado");
  incoming.error(Phase::lex, {1, 1}, 1, "nuevo");

  base.absorb(incoming);
  REQUIRE(base.errors().size() == 2);
  CHECK(base.errors()[0].message == "nuevo");
  CHECK(base.errors()[1].message == "mio");
}

TEST_CASE("phase names match the command line flags") {
  CHECK(std::string(phase_name(Phase::lex)) == "lex");
  CHECK(std::string(phase_name(Phase::sin)) == "sin");
  CHECK(std::string(phase_name(Phase::sem)) == "sem");
  CHECK(std::string(phase_name(Phase::gen)) == "gen");
}
