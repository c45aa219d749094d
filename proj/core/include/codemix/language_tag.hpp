#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codemix {

/// The set of languages found in (or assigned to) one document.
///
/// Stored in first-occurrence order and rendered comma-joined ("zu,en").
/// Comparison with == is set equality; "und" only ever appears alone.
class LanguageTag {
public:
    /// Throws InvalidTag if empty, duplicated, or "und" mixed with others.
    explicit LanguageTag(std::vector<std::string> langs);

    /// Parses "zu,en". Throws InvalidTag.
    static LanguageTag parse(std::string_view text);
    static LanguageTag undetermined();

    const std::vector<std::string>& langs() const noexcept { return langs_; }
    std::size_t size() const noexcept { return langs_.size(); }
    bool is_undetermined() const noexcept;
    bool contains(std::string_view lang) const;

    /// Occurrence-order rendering.
    std::string str() const;
    /// Sorted rendering; identical for set-equal tags.
    std::string canonical() const;

    friend bool operator==(const LanguageTag& a, const LanguageTag& b) {
        return a.canonical() == b.canonical();
    }

private:
    std::vector<std::string> langs_;
};

/// Parses a ';'-separated list of tags, e.g. "en;zu;en,zu".
std::vector<LanguageTag> parse_tag_list(std::string_view text);

}  // namespace codemix
