#include "doctest.h"

#include <string>

#include "pl0plus/xml.hpp"

using namespace pl0plus;

namespace {

xml::Element leaf(std::string name) {
  xml::Element e;
  e.name = std::move(name);
  return e;
}

}  // namespace

TEST_CASE("serialization is canonical: two-space indent, self-closing leaves") {
  xml::Element root = leaf("programa");
  xml::Element child = leaf("bloque");
  xml::Element grand = leaf("variable");
  grand.set("nombre", "x");
  child.children.push_back(grand);
  root.children.push_back(child);

  CHECK(xml::serialize(root) ==
        "<programa>\n"
        "  <bloque>\n"
        "    <variable nombre=\"x\"/>\n"
        "  </bloque>\n"
        "</programa>\n");
}

TEST_CASE("attributes keep their stored order") {
  xml::Element e = leaf("numero");
  e.set("valor", "10");
  e.set("columna", "5");
  e.set("linea", "3");
  e.set("longitud", "2");
  CHECK(xml::serialize(e) ==
        "<numero valor=\"10\" columna=\"5\" linea=\"3\" longitud=\"2\"/>\n");
}

TEST_CASE("attribute escaping covers markup and control characters") {
  CHECK(xml::escape_attribute("a&b<c>d\"e") == "a&amp;b&lt;c&gt;d&quot;e");
  CHECK(xml::escape_attribute("l1\nl2\tcol\rfin") == "l1&#10;l2&#9;col&#13;fin");
  CHECK(xml::escape_attribute("normal") == "normal");
}

TEST_CASE("parse reads both quote styles and entity forms") {
  xml::ParseResult doc = xml::parse(
      "<a uno='x&lt;y' dos=\"&amp;&gt;&quot;&apos;\" tres='A&#66;&#x43;'/>");
  REQUIRE(doc.ok());
  CHECK(*doc.root->attr("uno") == "x<y");
  CHECK(*doc.root->attr("dos") == "&>\"'");
  CHECK(*doc.root->attr("tres") == "ABC");
}

TEST_CASE("numeric character references decode as UTF-8") {
  xml::ParseResult doc = xml::parse("<a n='&#241;'/>");
  REQUIRE(doc.ok());
  CHECK(*doc.root->attr("n") == "\xC3\xB1");
}

TEST_CASE("prolog and comments are skipped, inside and outside the root") {
  xml::ParseResult doc = xml::parse(
      "<?xml version=\"1.0\"?>\n"
      "<!-- encabezado -->\n"
      "<raiz>\n"
      "  <!-- entre hijos -->\n"
      "  <hijo/>\n"
      "</raiz>\n"
      "<!-- final -->\n");
  REQUIRE(doc.ok());
  CHECK(doc.root->name == "raiz");
  REQUIRE(doc.root->children.size() == 1);
  CHECK(doc.root->children[0].name == "hijo");
}

TEST_CASE("missing attribute lookups return null") {
  xml::ParseResult doc = xml::parse("<a x='1'/>");
  REQUIRE(doc.ok());
  CHECK(doc.root->attr("x") != nullptr);
  CHECK(doc.root->attr("y") == nullptr);
}

TEST_CASE("malformed documents report the offending line") {
  SUBCASE("text content is rejected") {
    xml::ParseResult doc = xml::parse("<a>\n\ntexto</a>");
    CHECK_FALSE(doc.ok());
    CHECK(doc.error == "texto inesperado dentro de a");
    CHECK(doc.error_line == 3);
  }
  SUBCASE("mismatched closing tag") {
    xml::ParseResult doc = xml::parse("<a><b></c></a>");
    CHECK_FALSE(doc.ok());
    CHECK(doc.error == "etiqueta de cierre c no corresponde a b");
  }
  SUBCASE("unterminated element") {
    xml::ParseResult doc = xml::parse("<a><b>");
    CHECK_FALSE(doc.ok());
    CHECK(doc.error == "falta la etiqueta de cierre de b");
  }
  SUBCASE("trailing content after the root") {
    xml::ParseResult doc = xml::parse("<a/><b/>");
    CHECK_FALSE(doc.ok());
    CHECK(doc.error == "contenido después del elemento raíz");
  }
  SUBCASE("unknown entity") {
    xml::ParseResult doc = xml::parse("<a x='&nada;'/>");
    CHECK_FALSE(doc.ok());
    CHECK(doc.error == "entidad desconocida: &nada;");
  }
  SUBCASE("raw '<' inside an attribute value") {
    xml::ParseResult doc = xml::parse("<a x='1<2'/>");
    CHECK_FALSE(doc.ok());
    CHECK(doc.error == "'<' en valor de atributo");
  }
  SUBCASE("empty input") {
    CHECK_FALSE(xml::parse("").ok());
    CHECK_FALSE(xml::parse("   \n  ").ok());
  }
}

TEST_CASE("serialize and parse are inverse on attribute-only documents") {
  xml::Element root = leaf("doc");
  xml::Element a = leaf("a");
  a.set("raro", "comillas \" y <signos> & saltos\nde linea");
  a.set("vacio", "");
  xml::Element b = leaf("b");
  b.children.push_back(leaf("c"));
  root.children.push_back(a);
  root.children.push_back(b);

  std::string once = xml::serialize(root);
  xml::ParseResult doc = xml::parse(once);
  REQUIRE(doc.ok());
  CHECK(xml::serialize(*doc.root) == once);
  CHECK(*doc.root->children[0].attr("raro") ==
        "comillas \" y <signos> & saltos\nde linea");
}
