#pragma once

#include <string>

#include "json.hpp"

namespace hpspec {

using Json = nlohmann::ordered_json;

// Serializes with insertion-ordered keys and every floating value as %.12e,
// so output bytes depend only on the values. indent <= 0 gives one line.
std::string emit_json(const Json& value, int indent = 2);

std::string format_double(double x);

}  // namespace hpspec
