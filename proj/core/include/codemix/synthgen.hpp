#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codemix/document.hpp"

namespace codemix {

struct MixSpec {
    std::string lang_a;
    std::string lang_b;
    std::vector<std::string> source_a;
    std::vector<std::string> source_b;
    std::size_t n_docs = 1000;
    double mix_rate = 0.5;
    std::size_t tokens_per_doc = 12;
    std::uint64_t seed = 42;
};

/// Gold-tagged synthetic corpus.
///
/// With probability mix_rate a document is a run of lang_a tokens followed by
/// a run of lang_b tokens, split point uniform over the interior positions,
/// tagged "a,b". Otherwise a fair coin picks one pool for every token and the
/// tag is that single language. Tokens are drawn uniformly with replacement.
/// Throws InvalidSpec for empty or overlapping pools, tokens_per_doc < 4,
/// n_docs == 0, mix_rate outside [0, 1], or bad language codes.
std::vector<Document> generate(const MixSpec& spec);

/// `words` distinct words over the alphabet with lengths uniform in
/// [min_len, max_len]. Throws InvalidSpec if the alphabet cannot supply them.
std::vector<std::string> make_lexicon(std::u32string_view alphabet, std::size_t words,
                                      std::size_t min_len, std::size_t max_len,
                                      std::uint64_t seed);

/// Lines of space-joined words drawn uniformly from the lexicon.
std::vector<std::string> make_sentences(std::span<const std::string> lexicon,
                                        std::size_t lines, std::size_t tokens_per_line,
                                        std::uint64_t seed);

}  // namespace codemix
