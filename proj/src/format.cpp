#include "terratrack/format.hpp"

#include <charconv>

namespace terratrack {

std::string format_full(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_sig(double value, int digits) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, digits);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace terratrack
