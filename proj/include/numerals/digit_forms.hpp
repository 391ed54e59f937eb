#pragma once

#include <array>
#include <string_view>

namespace numerals {

/// Display forms of the ten decimal digits in three scripts.
struct DigitForm {
    int value;
    std::string_view devanagari;
    std::string_view arabic_indic;
    std::string_view western;
};

const std::array<DigitForm, 10>& digit_forms();

}  // namespace numerals
