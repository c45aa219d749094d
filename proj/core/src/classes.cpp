#include "codemix/classes.hpp"

#include "codemix/error.hpp"

namespace codemix {

ClassScheme::ClassScheme(std::vector<LanguageTag> declared) : declared_(std::move(declared)) {
    std::set<std::string> seen;
    for (const auto& tag : declared_) {
        if (!seen.insert(tag.canonical()).second) {
            throw Error(ErrorCode::InvalidConfig, "class '" + tag.str() + "' declared twice");
        }
    }
}

std::string ClassScheme::class_of(const LanguageTag& tag) const {
    if (open()) return tag.canonical();
    for (const auto& d : declared_) {
        if (d == tag) return d.canonical();
    }
    return std::string(kOtherClass);
}

std::vector<std::string> ClassScheme::ordered(const std::set<std::string>& observed) const {
    if (open()) return {observed.begin(), observed.end()};
    std::vector<std::string> out;
    out.reserve(declared_.size() + 1);
    for (const auto& d : declared_) out.push_back(d.canonical());
    out.emplace_back(kOtherClass);
    return out;
}

}  // namespace codemix
