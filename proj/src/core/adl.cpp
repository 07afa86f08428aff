#include "amk/core/adl.hpp"

#include <cctype>

#include "amk/errors.hpp"

namespace amk::core {
namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class AdlParser {
 public:
  explicit AdlParser(std::string_view text) : text_(text) {}

  std::vector<ComponentTemplate> parse_all() {
    std::vector<ComponentTemplate> out;
    skip_ws();
    while (!eof()) {
      out.push_back(parse_component());
      skip_ws();
    }
    if (out.empty()) fail("no component block found");
    return out;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) {
    size_t line = 1;
    for (size_t i = 0; i < pos_ && i < text_.size(); ++i)
      if (text_[i] == '\n') ++line;
    raise(Errc::AdlParseError, what + " (line " + std::to_string(line) + ")");
  }

  void skip_ws() {
    for (;;) {
      while (!eof() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == ',')) ++pos_;
      if (!eof() && peek() == '#') {
        while (!eof() && peek() != '\n') ++pos_;
        continue;
      }
      return;
    }
  }

  bool try_consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    // keywords must not be glued to a longer identifier
    if (!token.empty() && is_ident_char(token.back())) {
      size_t next = pos_ + token.size();
      if (next < text_.size() && is_ident_char(text_[next])) return false;
    }
    pos_ += token.size();
    return true;
  }

  void consume(std::string_view token) {
    if (!try_consume(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (!eof() && is_ident_char(peek())) ++pos_;
    if (pos_ == start) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  int arity() {
    skip_ws();
    size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected an arity");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::pair<std::string, std::string> dotted_ref() {
    std::string first = ident();
    consume(".");
    std::string second = ident();
    return {first, second};
  }

  InterfaceDecl parse_interface(Role role) {
    InterfaceDecl decl;
    decl.role = role;
    decl.name = ident();
    consume("(");
    while (!try_consume(")")) {
      OperationSig op;
      op.name = ident();
      consume("/");
      op.arity = arity();
      decl.signature.push_back(std::move(op));
    }
    if (role == Role::Client && try_consume("optional")) decl.optional = true;
    consume(";");
    if (decl.signature.empty()) fail("interface '" + decl.name + "' has an empty signature");
    return decl;
  }

  ComponentTemplate parse_component() {
    consume("component");
    ComponentTemplate tmpl;
    tmpl.id = ident();
    consume("{");
    bool has_primitive = false;
    bool has_composite = false;
    CompositeContent composite;
    PrimitiveContent primitive;
    for (;;) {
      if (try_consume("}")) break;
      if (try_consume("server")) {
        tmpl.interfaces.push_back(parse_interface(Role::Server));
      } else if (try_consume("client")) {
        tmpl.interfaces.push_back(parse_interface(Role::Client));
      } else if (try_consume("primitive")) {
        if (has_primitive || has_composite) fail("conflicting content clauses");
        primitive.behavior = ident();
        consume(";");
        has_primitive = true;
      } else if (try_consume("contains")) {
        if (has_primitive) fail("conflicting content clauses");
        has_composite = true;
        while (!try_consume(";")) composite.children.push_back(ident());
      } else if (try_consume("bind")) {
        if (has_primitive) fail("bind clause in a primitive component");
        has_composite = true;
        BindingSpec spec;
        std::tie(spec.client_component, spec.client_interface) = dotted_ref();
        consume("->");
        std::tie(spec.server_component, spec.server_interface) = dotted_ref();
        consume(";");
        composite.bindings.push_back(std::move(spec));
      } else if (try_consume("export")) {
        if (has_primitive) fail("export clause in a primitive component");
        has_composite = true;
        ExportSpec spec;
        spec.interface = ident();
        consume("->");
        std::tie(spec.child, spec.child_interface) = dotted_ref();
        consume(";");
        composite.exports.push_back(std::move(spec));
      } else {
        fail("unexpected clause");
      }
    }
    if (!has_primitive && !has_composite) fail("component '" + tmpl.id + "' has no content clause");
    if (has_primitive)
      tmpl.content = std::move(primitive);
    else
      tmpl.content = std::move(composite);
    // duplicate interface names are rejected here; deeper checks happen at
    // registration and instantiation time
    for (size_t i = 0; i < tmpl.interfaces.size(); ++i)
      for (size_t j = i + 1; j < tmpl.interfaces.size(); ++j)
        if (tmpl.interfaces[i].name == tmpl.interfaces[j].name)
          fail("duplicate interface name '" + tmpl.interfaces[i].name + "'");
    tmpl.adl = serialize_adl(tmpl);
    return tmpl;
  }
};

}  // namespace

std::vector<ComponentTemplate> parse_adl(std::string_view text) {
  return AdlParser(text).parse_all();
}

ComponentTemplate parse_adl_component(std::string_view text) {
  auto all = parse_adl(text);
  if (all.size() != 1)
    raise(Errc::AdlParseError, "expected exactly one component block, found " + std::to_string(all.size()));
  return std::move(all.front());
}

std::string serialize_adl(const ComponentTemplate& tmpl) {
  std::string out = "component " + tmpl.id + " {\n";
  for (const InterfaceDecl& decl : tmpl.interfaces) {
    out += decl.role == Role::Server ? "  server " : "  client ";
    out += decl.name + "(";
    for (size_t i = 0; i < decl.signature.size(); ++i) {
      if (i > 0) out += " ";
      out += decl.signature[i].name + "/" + std::to_string(decl.signature[i].arity);
    }
    out += ")";
    if (decl.role == Role::Client && decl.optional) out += " optional";
    out += ";\n";
  }
  if (tmpl.is_primitive()) {
    out += "  primitive " + tmpl.primitive().behavior + ";\n";
  } else {
    const CompositeContent& c = tmpl.composite();
    out += "  contains";
    for (const TemplateId& child : c.children) out += " " + child;
    out += ";\n";
    for (const BindingSpec& b : c.bindings)
      out += "  bind " + b.client_component + "." + b.client_interface + " -> " + b.server_component +
             "." + b.server_interface + ";\n";
    for (const ExportSpec& e : c.exports)
      out += "  export " + e.interface + " -> " + e.child + "." + e.child_interface + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace amk::core
