#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "codemix/language_tag.hpp"

namespace codemix {

inline constexpr std::string_view kOtherClass = "other";

/// Maps composite tags to evaluation classes.
///
/// An open scheme makes every distinct tag set its own class, named by its
/// sorted rendering. A closed scheme keeps the declared tags and folds
/// everything else into "other".
class ClassScheme {
public:
    ClassScheme() = default;
    explicit ClassScheme(std::vector<LanguageTag> declared);

    bool open() const noexcept { return declared_.empty(); }
    const std::vector<LanguageTag>& declared() const noexcept { return declared_; }

    std::string class_of(const LanguageTag& tag) const;

    /// Class list for reporting: declared classes then "other" for a closed
    /// scheme; the sorted observed classes for an open one.
    std::vector<std::string> ordered(const std::set<std::string>& observed) const;

private:
    std::vector<LanguageTag> declared_;
};

}  // namespace codemix
