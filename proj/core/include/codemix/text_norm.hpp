#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace codemix {

/// Cleaned message text: lower-case letters and combining marks separated by
/// single ASCII spaces, with no leading or trailing space.
///
/// Only `normalize` (or `NormalizedText::assume_normalized` for text already
/// known to satisfy the invariants) produces values of this type.
class NormalizedText {
public:
    NormalizedText() = default;

    static NormalizedText assume_normalized(std::string text) {
        NormalizedText t;
        t.value_ = std::move(text);
        return t;
    }

    const std::string& str() const noexcept { return value_; }
    bool empty() const noexcept { return value_.empty(); }

    /// Space-separated tokens.
    std::vector<std::string> tokens() const;

    friend bool operator==(const NormalizedText&, const NormalizedText&) = default;

private:
    std::string value_;
};

/// Strips punctuation, symbols (emoji included), numbers, control and
/// unassigned codepoints, then case-folds and collapses whitespace.
///
/// Removed codepoints vanish without leaving a separator, so "don't" becomes
/// "dont"; whitespace around them collapses. Ill-formed UTF-8 is treated as
/// U+FFFD and removed.
NormalizedText normalize(std::string_view raw);

/// Classification used by `normalize`, exposed for tests and tooling.
enum class CharClass { Keep, Space, Drop };
CharClass classify(char32_t cp);

/// Simple (single codepoint) case folding.
char32_t fold_case(char32_t cp);

}  // namespace codemix
