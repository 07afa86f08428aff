#include "amk/xml.hpp"

#include <cctype>

#include "amk/errors.hpp"

namespace amk::xml {
namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == ':';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse_document() {
    skip_misc();
    if (eof()) fail("empty document");
    Node root = parse_element();
    skip_misc();
    if (!eof()) fail("trailing content after root element");
    return root;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  [[noreturn]] void fail(const std::string& what) {
    raise(Errc::MalformedXml, what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  // whitespace, comments and processing instructions between elements
  void skip_misc() {
    for (;;) {
      skip_ws();
      if (starts_with("<!--")) {
        size_t end = text_.find("-->", pos_ + 4);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 3;
      } else if (starts_with("<?")) {
        size_t end = text_.find("?>", pos_ + 2);
        if (end == std::string_view::npos) fail("unterminated processing instruction");
        pos_ = end + 2;
      } else {
        return;
      }
    }
  }

  std::string read_name() {
    size_t start = pos_;
    while (!eof() && is_name_char(peek())) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string decode(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out += raw[i];
        continue;
      }
      size_t semi = raw.find(';', i);
      if (semi == std::string_view::npos) fail("unterminated entity");
      std::string_view ent = raw.substr(i + 1, semi - i - 1);
      if (ent == "lt") out += '<';
      else if (ent == "gt") out += '>';
      else if (ent == "amp") out += '&';
      else if (ent == "quot") out += '"';
      else if (ent == "apos") out += '\'';
      else fail("unknown entity '" + std::string(ent) + "'");
      i = semi;
    }
    return out;
  }

  Node parse_element() {
    if (eof() || peek() != '<') fail("expected '<'");
    ++pos_;
    Node node;
    node.name = read_name();
    for (;;) {
      skip_ws();
      if (eof()) fail("unterminated start tag");
      if (peek() == '/') {
        if (!starts_with("/>")) fail("expected '/>'");
        pos_ += 2;
        return node;
      }
      if (peek() == '>') {
        ++pos_;
        break;
      }
      std::string attr_name = read_name();
      skip_ws();
      if (eof() || peek() != '=') fail("expected '=' after attribute name");
      ++pos_;
      skip_ws();
      if (eof() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
      char quote = peek();
      ++pos_;
      size_t start = pos_;
      while (!eof() && peek() != quote) ++pos_;
      if (eof()) fail("unterminated attribute value");
      node.attrs.emplace_back(std::move(attr_name), decode(text_.substr(start, pos_ - start)));
      ++pos_;
    }
    // content
    for (;;) {
      size_t start = pos_;
      while (!eof() && peek() != '<') ++pos_;
      if (pos_ > start) node.text += decode(text_.substr(start, pos_ - start));
      if (eof()) fail("unterminated element '" + node.name + "'");
      if (starts_with("<!--")) {
        size_t end = text_.find("-->", pos_ + 4);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 3;
        continue;
      }
      if (starts_with("</")) {
        pos_ += 2;
        std::string close = read_name();
        if (close != node.name) fail("mismatched closing tag '" + close + "' for '" + node.name + "'");
        skip_ws();
        if (eof() || peek() != '>') fail("expected '>' in closing tag");
        ++pos_;
        return node;
      }
      node.children.push_back(parse_element());
    }
  }
};

void serialize_node(const Node& node, std::string& out, int depth) {
  std::string indent(static_cast<size_t>(depth) * 2, ' ');
  out += indent + "<" + node.name;
  for (const auto& [k, v] : node.attrs) out += " " + k + "=\"" + escape(v) + "\"";
  std::string text = trim(node.text);
  if (node.children.empty() && text.empty()) {
    out += "/>\n";
    return;
  }
  out += ">";
  if (node.children.empty()) {
    // Text beginning with '<' is an opaque markup blob kept verbatim.
    out += text.starts_with('<') ? text : escape(text);
    out += "</" + node.name + ">\n";
    return;
  }
  out += "\n";
  if (!text.empty()) out += indent + "  " + escape(text) + "\n";
  for (const Node& child : node.children) serialize_node(child, out, depth + 1);
  out += indent + "</" + node.name + ">\n";
}

}  // namespace

const Node* Node::child(std::string_view child_name) const {
  for (const Node& c : children)
    if (c.name == child_name) return &c;
  return nullptr;
}

std::vector<const Node*> Node::children_named(std::string_view child_name) const {
  std::vector<const Node*> out;
  for (const Node& c : children)
    if (c.name == child_name) out.push_back(&c);
  return out;
}

const std::string* Node::attr(std::string_view attr_name) const {
  for (const auto& [k, v] : attrs)
    if (k == attr_name) return &v;
  return nullptr;
}

Node parse(std::string_view text) { return Parser(text).parse_document(); }

std::string serialize(const Node& root) {
  std::string out;
  serialize_node(root, out, 0);
  return out;
}

std::string inner_content(const Node& node) {
  if (node.children.empty()) return trim(node.text);
  std::string out;
  for (const Node& child : node.children) serialize_node(child, out, 0);
  return trim(out);
}

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string trim(std::string_view text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

}  // namespace amk::xml
