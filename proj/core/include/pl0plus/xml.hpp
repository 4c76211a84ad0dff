#ifndef PL0PLUS_XML_HPP
#define PL0PLUS_XML_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pl0plus::xml {

// Minimal XML layer for the compiler's interchange files. The documents it
// handles carry all data in attributes: elements, attributes, comments and
// an optional prolog, but no text content, namespaces or CDATA.

struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;

  const std::string* attr(std::string_view attr_name) const;
  void set(std::string attr_name, std::string value);
};

struct ParseResult {
  std::optional<Element> root;
  std::string error;  // empty on success
  int error_line = 0;

  bool ok() const { return root.has_value(); }
};

ParseResult parse(std::string_view text);

/// Canonical serialization: 2-space indentation, LF line endings, attributes
/// in stored order, `<name .../>` for childless elements, trailing newline.
std::string serialize(const Element& root);

std::string escape_attribute(std::string_view value);

}  // namespace pl0plus::xml

#endif
