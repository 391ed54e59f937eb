#pragma once

#include <string_view>

namespace numerals::utf8 {

bool is_ascii(std::string_view text);

/// The first encoded character of `text` (one to four bytes). A malformed
/// lead byte yields a single byte so callers can report it.
std::string_view first_char(std::string_view text);

}  // namespace numerals::utf8
