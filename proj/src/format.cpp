#include "fracdamp/format.hpp"

#include <charconv>
#include <system_error>

#include "fracdamp/errors.hpp"

namespace fracdamp {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw Error("format_double: to_chars failed");
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("not a decimal number: '" + std::string(text) + "'");
    return value;
}

double parse_number(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_double(text);
    const double num = parse_double(text.substr(0, slash));
    const double den = parse_double(text.substr(slash + 1));
    if (den == 0.0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return num / den;
}

}  // namespace fracdamp
