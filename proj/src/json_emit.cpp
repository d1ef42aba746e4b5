#include "hpspec/json_emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hpspec {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", x == 0.0 ? 0.0 : x);
  return buf;
}

namespace {

void write(const Json& v, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        write(it.value(), indent, depth + 1, out);
      }
      out += nl;
      out += close_pad;
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // short numeric arrays (points) stay on one line
      const bool inline_array = v.size() <= 2 && std::all_of(v.begin(), v.end(), [](const Json& e) {
                                  return e.is_number();
                                });
      out += "[";
      if (!inline_array) out += nl;
      bool first = true;
      for (const auto& e : v) {
        if (!first) {
          out += ",";
          if (!inline_array) out += nl;
          else out += " ";
        }
        first = false;
        if (!inline_array) out += pad;
        write(e, indent, depth + 1, out);
      }
      if (!inline_array) {
        out += nl;
        out += close_pad;
      }
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::string emit_json(const Json& value, int indent) {
  std::string out;
  write(value, std::max(indent, 0), 0, out);
  out += "\n";
  return out;
}

}  // namespace hpspec
