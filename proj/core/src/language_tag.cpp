#include "codemix/language_tag.hpp"

#include <algorithm>

#include "codemix/error.hpp"
#include "codemix/profile.hpp"

namespace codemix {

LanguageTag::LanguageTag(std::vector<std::string> langs) : langs_(std::move(langs)) {
    if (langs_.empty()) throw Error(ErrorCode::InvalidTag, "language tag is empty");
    for (std::size_t i = 0; i < langs_.size(); ++i) {
        const auto& code = langs_[i];
        if (code == kUndetermined) {
            if (langs_.size() != 1) {
                throw Error(ErrorCode::InvalidTag, "'und' cannot be combined with other languages");
            }
            continue;
        }
        if (!is_valid_language_code(code)) {
            throw Error(ErrorCode::InvalidTag, "invalid language code '" + code + "' in tag");
        }
        if (std::find(langs_.begin(), langs_.begin() + static_cast<std::ptrdiff_t>(i), code) !=
            langs_.begin() + static_cast<std::ptrdiff_t>(i)) {
            throw Error(ErrorCode::InvalidTag, "duplicate language '" + code + "' in tag");
        }
    }
}

LanguageTag LanguageTag::parse(std::string_view text) {
    std::vector<std::string> langs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        if (part.empty()) {
            throw Error(ErrorCode::InvalidTag, "empty language code in tag '" + std::string(text) + "'");
        }
        langs.emplace_back(part);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return LanguageTag(std::move(langs));
}

LanguageTag LanguageTag::undetermined() {
    return LanguageTag({std::string(kUndetermined)});
}

bool LanguageTag::is_undetermined() const noexcept {
    return langs_.size() == 1 && langs_.front() == kUndetermined;
}

bool LanguageTag::contains(std::string_view lang) const {
    return std::find(langs_.begin(), langs_.end(), lang) != langs_.end();
}

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out.push_back(',');
        out += p;
    }
    return out;
}

}  // namespace

std::string LanguageTag::str() const { return join(langs_); }

std::string LanguageTag::canonical() const {
    auto sorted = langs_;
    std::sort(sorted.begin(), sorted.end());
    return join(sorted);
}

std::vector<LanguageTag> parse_tag_list(std::string_view text) {
    std::vector<LanguageTag> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto semi = text.find(';', start);
        if (semi == std::string_view::npos) semi = text.size();
        const auto part = text.substr(start, semi - start);
        if (!part.empty()) out.push_back(LanguageTag::parse(part));
        start = semi + 1;
    }
    return out;
}

}  // namespace codemix
