#pragma once

#include <string>
#include <string_view>

namespace fracdamp {

/// Shortest decimal representation that parses back to the identical double.
std::string format_double(double value);

/// Inverse of format_double; the whole string must be consumed.
/// Throws ParseError on malformed input.
double parse_double(std::string_view text);

/// parse_double extended with simple rational literals ("15/16").
double parse_number(std::string_view text);

}  // namespace fracdamp
