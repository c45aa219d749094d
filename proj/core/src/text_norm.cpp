#include "codemix/text_norm.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "codemix/utf8.hpp"

namespace codemix {

CharClass classify(char32_t cp) {
    const auto c = static_cast<UChar32>(cp);
    // Pictographs include a few letters (U+2139) and punctuation (U+203C).
    if (u_hasBinaryProperty(c, UCHAR_EXTENDED_PICTOGRAPHIC)) return CharClass::Drop;
    if (u_isUWhiteSpace(c)) return CharClass::Space;
    const uint32_t mask = U_GET_GC_MASK(c);
    if (mask & U_GC_Z_MASK) return CharClass::Space;
    // Variation selectors are Mn but only steer emoji/glyph presentation.
    if (u_hasBinaryProperty(c, UCHAR_VARIATION_SELECTOR)) return CharClass::Drop;
    if (mask & (U_GC_L_MASK | U_GC_M_MASK)) return CharClass::Keep;
    return CharClass::Drop;
}

char32_t fold_case(char32_t cp) {
    return static_cast<char32_t>(u_foldCase(static_cast<UChar32>(cp), U_FOLD_CASE_DEFAULT));
}

namespace {

bool is_mark(char32_t cp) {
    return (U_GET_GC_MASK(static_cast<UChar32>(cp)) & U_GC_M_MASK) != 0;
}

}  // namespace

NormalizedText normalize(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());

    const auto* bytes = reinterpret_cast<const uint8_t*>(raw.data());
    const auto size = static_cast<int32_t>(raw.size());
    bool pending_space = false;
    // A mark is kept only while it extends a kept letter; marks left behind
    // by a removed base or a separator go with it.
    bool has_base = false;

    int32_t i = 0;
    while (i < size) {
        UChar32 c;
        U8_NEXT(bytes, i, size, c);
        const char32_t cp = c < 0 ? U'�' : static_cast<char32_t>(c);

        switch (classify(cp)) {
            case CharClass::Space:
                pending_space = true;
                has_base = false;
                break;
            case CharClass::Drop:
                has_base = false;
                break;
            case CharClass::Keep: {
                const bool mark = is_mark(cp);
                if (mark && !has_base) break;
                if (pending_space && !out.empty()) out.push_back(' ');
                pending_space = false;
                // Marks are caseless; U+0345 would otherwise fold to a letter.
                utf8::append(out, mark ? cp : fold_case(cp));
                has_base = true;
                break;
            }
        }
    }
    return NormalizedText::assume_normalized(std::move(out));
}

std::vector<std::string> NormalizedText::tokens() const {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < value_.size()) {
        std::size_t end = value_.find(' ', start);
        if (end == std::string::npos) end = value_.size();
        if (end > start) out.emplace_back(value_.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

}  // namespace codemix
