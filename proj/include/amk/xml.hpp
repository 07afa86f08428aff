// Minimal XML document model for the descriptor files exchanged between
// the kernel components. Covers elements, attributes, character data and
// comments; no namespaces, DTDs or CDATA.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace amk::xml {

struct Node {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::string text;  // concatenated character data directly inside the element
  std::vector<Node> children;

  const Node* child(std::string_view child_name) const;
  std::vector<const Node*> children_named(std::string_view child_name) const;
  const std::string* attr(std::string_view attr_name) const;

  bool operator==(const Node&) const = default;
};

// Throws Error{MalformedXml} on anything it cannot read.
Node parse(std::string_view text);

// Canonical indented form; parse(serialize(n)) has the same structure as n
// modulo whitespace-only text.
std::string serialize(const Node& root);

// Re-serializes the content of a node (children or text) without the
// surrounding tag. Used to keep unknown subtrees as opaque strings.
std::string inner_content(const Node& node);

std::string escape(std::string_view text);
std::string trim(std::string_view text);

}  // namespace amk::xml
