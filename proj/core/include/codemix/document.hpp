#pragma once

#include <optional>
#include <string>

#include "codemix/language_tag.hpp"

namespace codemix {

struct Document {
    std::string id;
    std::string text;
    std::optional<LanguageTag> gold_tag;
    std::optional<LanguageTag> pred_tag;
};

}  // namespace codemix
