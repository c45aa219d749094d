#include "codemix/utf8.hpp"

#include <unicode/utf8.h>

namespace codemix::utf8 {

std::u32string decode(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
    const auto size = static_cast<int32_t>(text.size());
    int32_t i = 0;
    while (i < size) {
        UChar32 cp;
        U8_NEXT(bytes, i, size, cp);
        out.push_back(cp < 0 ? U'�' : static_cast<char32_t>(cp));
    }
    return out;
}

void append(std::string& out, char32_t cp) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t len = 0;
    U8_APPEND_UNSAFE(buf, len, static_cast<UChar32>(cp));
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(len));
}

std::string encode(std::u32string_view codepoints) {
    std::string out;
    out.reserve(codepoints.size());
    for (char32_t cp : codepoints) append(out, cp);
    return out;
}

std::size_t length(std::string_view text) {
    const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
    const auto size = static_cast<int32_t>(text.size());
    std::size_t n = 0;
    int32_t i = 0;
    while (i < size) {
        UChar32 cp;
        U8_NEXT(bytes, i, size, cp);
        ++n;
    }
    return n;
}

}  // namespace codemix::utf8
