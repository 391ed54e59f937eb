#include "numerals/digit_forms.hpp"

namespace numerals {

const std::array<DigitForm, 10>& digit_forms() {
    static constexpr std::array<DigitForm, 10> kForms{{
        {0, "०", "٠", "0"},
        {1, "१", "١", "1"},
        {2, "२", "٢", "2"},
        {3, "३", "٣", "3"},
        {4, "४", "٤", "4"},
        {5, "५", "٥", "5"},
        {6, "६", "٦", "6"},
        {7, "७", "٧", "7"},
        {8, "८", "٨", "8"},
        {9, "९", "٩", "9"},
    }};
    return kForms;
}

}  // namespace numerals
