#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace codemix::utf8 {

/// Decodes UTF-8 into codepoints. Ill-formed sequences decode to U+FFFD.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view codepoints);

void append(std::string& out, char32_t cp);

/// Number of codepoints; ill-formed bytes count one each.
std::size_t length(std::string_view text);

}  // namespace codemix::utf8
