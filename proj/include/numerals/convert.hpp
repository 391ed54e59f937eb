#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "numerals/gap.hpp"
#include "numerals/integer.hpp"
#include "numerals/system.hpp"

namespace numerals {

struct ConvertOptions {
    /// Readings considered when decoding a gap-positional numeral; also the
    /// medial run width an encoded gap may stand for.
    gap::InterpretationBounds gap_bounds{};
    /// Roman input must be canonical.
    bool strict_roman = false;
    /// Output script for Greek and Aryabhata. Empty picks each system's
    /// default: Greek letters, and the Aryabhata transliteration.
    std::optional<Script> script{};
};

/// Reads `text` as a numeral of `system`. Throws ParseError / RangeError, and
/// AmbiguityError for a gap-positional numeral with more than one reading.
Integer decode(std::string_view text, const NumeralSystem& system, const ConvertOptions& options = {});

/// Canonical text for `n` in `system`. Roman switches to repetition style
/// above 3999. Gap-positional output must denote `n` exactly, so RangeError
/// is raised when trailing places would be lost or a run of empty places is
/// wider than gap_bounds.max_gap_width.
std::string encode(const Integer& n, const NumeralSystem& system, const ConvertOptions& options = {});

/// encode(decode(text, from), to): every conversion goes through Integer.
std::string convert(std::string_view text, const NumeralSystem& from, const NumeralSystem& to,
                    const ConvertOptions& options = {});

}  // namespace numerals
