#pragma once

#include <span>
#include <string_view>

namespace numerals::catalog {

enum class Source {
    Brahmagupta628,
    FortuneDebt,
    Bhaskara1150,
    Interpretation,  // choices this library makes where the texts are silent
    Modern,
    Exact,           // ordinary exact arithmetic, no special rule
};

std::string_view to_string(Source source);

struct Rule {
    std::string_view id;
    Source source;
    std::string_view statement;
};

/// Every rule id that can appear in a trace or an error message.
std::span<const Rule> rules();

/// nullptr for an unknown id.
const Rule* find(std::string_view id);

/// A place where the historical printed form disagrees with what is
/// implemented.
struct Erratum {
    std::string_view id;
    std::string_view printed;
    std::string_view corrected;
    std::string_view note;
};

std::span<const Erratum> errata();

}  // namespace numerals::catalog
