#ifndef PL0PLUS_XMLIO_HPP
#define PL0PLUS_XMLIO_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pl0plus/ast.hpp"
#include "pl0plus/diagnostics.hpp"
#include "pl0plus/token.hpp"

namespace pl0plus {

/// The three XML interchange documents and their file extensions.
enum class XmlDocumentKind { lex, sin, sem };

std::string_view document_extension(XmlDocumentKind kind);

/// <elementos_lexicos> with one empty element per token, named by the
/// token's tag and carrying nombre/valor plus columna, linea, longitud.
std::string write_tokens(std::span<const Token> tokens);

struct ReadTokensResult {
  std::vector<Token> tokens;
  DiagnosticLog log;
};
ReadTokensResult read_tokens(std::string_view text);

/// Serializes a tree as a <programa> document. kind selects whether the
/// semantic annotations (codigo= on declarations, simbolo= on identifier
/// references) are written; a sem tree written as sin is the same document
/// with the annotations stripped.
std::string write_tree(const Program& program, XmlDocumentKind kind);

struct ReadTreeResult {
  Program program;
  DiagnosticLog log;
};
ReadTreeResult read_tree(std::string_view text, XmlDocumentKind kind);

// Diagnostics documents are rendered by diagnostics render_xml; the driver
// wires them to the -e flag.

}  // namespace pl0plus

#endif
