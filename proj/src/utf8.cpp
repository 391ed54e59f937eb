#include "utf8.hpp"

#include <algorithm>

namespace numerals::utf8 {

bool is_ascii(std::string_view text) {
    return std::all_of(text.begin(), text.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

std::string_view first_char(std::string_view text) {
    if (text.empty())
        return text;
    auto lead = static_cast<unsigned char>(text.front());
    std::size_t len = lead < 0x80 ? 1 : (lead >> 5) == 0x6 ? 2 : (lead >> 4) == 0xE ? 3 : (lead >> 3) == 0x1E ? 4 : 1;
    return text.substr(0, std::min(len, text.size()));
}

}  // namespace numerals::utf8
