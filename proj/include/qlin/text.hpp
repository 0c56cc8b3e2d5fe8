#pragma once

#include <string>
#include <string_view>

#include "qlin/quaternion.hpp"

namespace qlin {

/// Parses the scalar syntax `a+bi+cj+dk` with optional omitted zero terms,
/// e.g. "1-2i+0.5k", "i", "-3.5e-2j". Throws ParseError on malformed input.
Quaternion parse_quaternion(std::string_view text);

/// Formats with 17 significant digits per component; parse(format(q)) == q exactly.
std::string format_quaternion(const Quaternion& q);

}  // namespace qlin
