#include "amk/value.hpp"

#include <charconv>

namespace amk {
namespace {

std::string format_double(double d) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, ptr);
}

}  // namespace

std::string Value::to_string() const {
  if (is_null()) return "null";
  if (is_bool()) return as_bool() ? "true" : "false";
  if (is_int()) return std::to_string(as_int());
  if (is_float()) return format_double(as_float());
  if (is_string()) return "\"" + as_string() + "\"";
  if (is_list()) {
    std::string out = "[";
    for (const auto& v : as_list()) {
      if (out.size() > 1) out += ", ";
      out += v.to_string();
    }
    return out + "]";
  }
  std::string out = "{";
  for (const auto& [k, v] : as_map()) {
    if (out.size() > 1) out += ", ";
    out += k + ": " + v.to_string();
  }
  return out + "}";
}

}  // namespace amk
