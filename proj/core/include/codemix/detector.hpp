#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "codemix/document.hpp"
#include "codemix/identify.hpp"
#include "codemix/language_tag.hpp"

namespace codemix {

inline constexpr int kDefaultChunks = 4;

/// Sizes of a balanced split of `count` items into min(k, count) parts; the
/// first (count mod parts) parts get one extra item. Throws EmptyTokens when
/// count is 0 and InvalidConfig when k < 1.
std::vector<std::size_t> chunk_sizes(std::size_t count, int k);

/// Contiguous balanced split of the tokens into at most k chunks.
std::vector<std::vector<std::string>> split_chunks(std::span<const std::string> tokens,
                                                   int k);

/// Distinct non-"und" codes in first-occurrence order, or "und" if none.
LanguageTag aggregate(std::span<const std::string> chunk_langs);

struct ChunkResult {
    std::size_t index = 0;
    std::string text;
    Prediction prediction;
    bool reliable = false;
};

struct DetectionResult {
    std::string doc_id;
    std::vector<ChunkResult> chunks;
    LanguageTag tag = LanguageTag::undetermined();
    bool code_switched = false;
};

struct DetectConfig {
    int chunks = kDefaultChunks;
    int min_chars = kDefaultMinChars;
};

/// normalize -> tokenize on spaces -> split into chunks -> identify each
/// chunk -> aggregate the top-1 labels.
DetectionResult detect(const Document& doc, const ProfileSet& profiles,
                       const DetectConfig& config = {});

/// Runs `detect` over the batch on up to `threads` workers (0 = hardware
/// concurrency). Results are in input order.
std::vector<DetectionResult> detect_batch(std::span<const Document> docs,
                                          const ProfileSet& profiles,
                                          const DetectConfig& config = {},
                                          unsigned threads = 0);

}  // namespace codemix
