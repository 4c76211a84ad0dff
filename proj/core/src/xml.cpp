#include "pl0plus/xml.hpp"

#include <cctype>
#include <sstream>

namespace pl0plus::xml {

const std::string* Element::attr(std::string_view attr_name) const {
  for (const auto& [name, value] : attributes) {
    if (name == attr_name) return &value;
  }
  return nullptr;
}

void Element::set(std::string attr_name, std::string value) {
  attributes.emplace_back(std::move(attr_name), std::move(value));
}

std::string escape_attribute(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += "&#9;"; break;
      default: out += c; break;
    }
  }
  return out;
}

namespace {

void serialize_into(const Element& e, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += '<';
  out += e.name;
  for (const auto& [name, value] : e.attributes) {
    out += ' ';
    out += name;
    out += "=\"";
    out += escape_attribute(value);
    out += '"';
  }
  if (e.children.empty()) {
    out += "/>\n";
    return;
  }
  out += ">\n";
  for (const auto& child : e.children) serialize_into(child, depth + 1, out);
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += "</";
  out += e.name;
  out += ">\n";
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  ParseResult run() {
    skip_misc();
    if (at_end()) return fail("documento vacío");
    Element root;
    if (!element(root)) return {std::nullopt, error_, error_line_};
    skip_misc();
    if (!at_end()) return fail("contenido después del elemento raíz");
    return {std::move(root), "", 0};
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  bool match(char c) {
    if (at_end() || peek() != c) return false;
    advance();
    return true;
  }

  ParseResult fail(std::string message) {
    error_ = std::move(message);
    error_line_ = line_;
    return {std::nullopt, error_, error_line_};
  }

  bool error(std::string message) {
    if (error_.empty()) {
      error_ = std::move(message);
      error_line_ = line_;
    }
    return false;
  }

  void skip_whitespace() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  // Whitespace, comments and processing instructions between elements.
  void skip_misc() {
    for (;;) {
      skip_whitespace();
      if (remaining_starts_with("<!--")) {
        pos_ += 4;
        while (!at_end() && !remaining_starts_with("-->")) advance();
        if (!at_end()) pos_ += 3;
        continue;
      }
      if (remaining_starts_with("<?")) {
        pos_ += 2;
        while (!at_end() && !remaining_starts_with("?>")) advance();
        if (!at_end()) pos_ += 2;
        continue;
      }
      break;
    }
  }

  bool remaining_starts_with(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  static bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
  }
  static bool name_char(char c) {
    return name_start(c) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '-' || c == '.';
  }

  bool read_name(std::string& out) {
    if (at_end() || !name_start(peek())) return error("se esperaba un nombre");
    out.clear();
    while (!at_end() && name_char(peek())) out += advance();
    return true;
  }

  bool read_entity(std::string& out) {
    std::string entity;
    while (!at_end() && peek() != ';') entity += advance();
    if (at_end()) return error("entidad sin terminar");
    advance();  // ';'
    if (entity == "lt") out += '<';
    else if (entity == "gt") out += '>';
    else if (entity == "amp") out += '&';
    else if (entity == "quot") out += '"';
    else if (entity == "apos") out += '\'';
    else if (!entity.empty() && entity[0] == '#') {
      int base = 10;
      std::size_t digits = 1;
      if (entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X')) {
        base = 16;
        digits = 2;
      }
      char* end = nullptr;
      long code = std::strtol(entity.c_str() + digits, &end, base);
      if (end == entity.c_str() + digits || *end != '\0' || code < 0 || code > 0x10FFFF)
        return error("referencia de carácter inválida");
      // Encode as UTF-8.
      unsigned cp = static_cast<unsigned>(code);
      if (cp < 0x80) {
        out += static_cast<char>(cp);
      } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      }
    } else {
      return error("entidad desconocida: &" + entity + ";");
    }
    return true;
  }

  bool read_attribute_value(std::string& out) {
    if (at_end() || (peek() != '"' && peek() != '\'')) return error("se esperaba comilla");
    char quote = advance();
    out.clear();
    while (!at_end() && peek() != quote) {
      char c = advance();
      if (c == '&') {
        if (!read_entity(out)) return false;
      } else if (c == '<') {
        return error("'<' en valor de atributo");
      } else {
        out += c;
      }
    }
    if (at_end()) return error("valor de atributo sin terminar");
    advance();  // closing quote
    return true;
  }

  bool element(Element& out) {
    if (!match('<')) return error("se esperaba '<'");
    if (!read_name(out.name)) return false;
    for (;;) {
      skip_whitespace();
      if (at_end()) return error("etiqueta sin terminar");
      if (match('/')) {
        if (!match('>')) return error("se esperaba '>'");
        return true;  // empty element
      }
      if (match('>')) break;
      std::string attr_name;
      std::string attr_value;
      if (!read_name(attr_name)) return false;
      skip_whitespace();
      if (!match('=')) return error("se esperaba '='");
      skip_whitespace();
      if (!read_attribute_value(attr_value)) return false;
      out.attributes.emplace_back(std::move(attr_name), std::move(attr_value));
    }
    // Content: child elements only.
    for (;;) {
      skip_misc();
      if (at_end()) return error("falta la etiqueta de cierre de " + out.name);
      if (remaining_starts_with("</")) {
        pos_ += 2;
        std::string closing;
        if (!read_name(closing)) return false;
        skip_whitespace();
        if (!match('>')) return error("se esperaba '>'");
        if (closing != out.name)
          return error("etiqueta de cierre " + closing + " no corresponde a " + out.name);
        return true;
      }
      if (peek() != '<') return error("texto inesperado dentro de " + out.name);
      Element child;
      if (!element(child)) return false;
      out.children.push_back(std::move(child));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::string error_;
  int error_line_ = 0;
};

}  // namespace

ParseResult parse(std::string_view text) { return Reader(text).run(); }

std::string serialize(const Element& root) {
  std::string out;
  serialize_into(root, 0, out);
  return out;
}

}  // namespace pl0plus::xml
