// Textual architecture description for component templates.
//
//   component <id> {
//     server <name>(<op>/<arity> ...);
//     client <name>(<op>/<arity> ...) [optional];
//     primitive <behavior>;            -- primitive content
//     contains <id> <id> ...;          -- composite content
//     bind <child>.<client> -> <child>.<server>;
//     export <name> -> <child>.<interface>;
//   }
//
// Identifiers may not contain '.', which is reserved for the
// <component>.<interface> notation in bind and export clauses.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amk/core/model.hpp"

namespace amk::core {

// Parses every component block in the text. Throws Error{AdlParseError}.
std::vector<ComponentTemplate> parse_adl(std::string_view text);

// Parses a text expected to contain exactly one component block.
ComponentTemplate parse_adl_component(std::string_view text);

// Canonical text form; parse(serialize(t)) is structurally equal to t.
std::string serialize_adl(const ComponentTemplate& tmpl);

}  // namespace amk::core
