#include "codemix/detector.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "codemix/error.hpp"

namespace codemix {

std::vector<std::size_t> chunk_sizes(std::size_t count, int k) {
    if (k < 1) throw Error(ErrorCode::InvalidConfig, "chunk count must be at least 1");
    if (count == 0) throw Error(ErrorCode::EmptyTokens, "cannot split an empty token sequence");
    const std::size_t parts = std::min(static_cast<std::size_t>(k), count);
    const std::size_t base = count / parts;
    const std::size_t extra = count % parts;
    std::vector<std::size_t> sizes(parts, base);
    for (std::size_t i = 0; i < extra; ++i) ++sizes[i];
    return sizes;
}

std::vector<std::vector<std::string>> split_chunks(std::span<const std::string> tokens, int k) {
    std::vector<std::vector<std::string>> chunks;
    auto it = tokens.begin();
    for (std::size_t size : chunk_sizes(tokens.size(), k)) {
        chunks.emplace_back(it, it + static_cast<std::ptrdiff_t>(size));
        it += static_cast<std::ptrdiff_t>(size);
    }
    return chunks;
}

LanguageTag aggregate(std::span<const std::string> chunk_langs) {
    std::vector<std::string> langs;
    for (const auto& lang : chunk_langs) {
        if (lang == kUndetermined) continue;
        if (std::find(langs.begin(), langs.end(), lang) == langs.end()) langs.push_back(lang);
    }
    if (langs.empty()) return LanguageTag::undetermined();
    return LanguageTag(std::move(langs));
}

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out.push_back(' ');
        out += t;
    }
    return out;
}

}  // namespace

DetectionResult detect(const Document& doc, const ProfileSet& profiles,
                       const DetectConfig& config) {
    if (profiles.empty()) throw Error(ErrorCode::EmptyProfileSet, "profile set is empty");
    if (config.chunks < 1) throw Error(ErrorCode::InvalidConfig, "chunk count must be at least 1");

    DetectionResult result;
    result.doc_id = doc.id;

    const auto tokens = normalize(doc.text).tokens();
    if (tokens.empty()) return result;

    std::vector<std::string> labels;
    std::size_t index = 0;
    for (auto& chunk : split_chunks(tokens, config.chunks)) {
        ChunkResult cr;
        cr.index = index++;
        cr.text = join_tokens(chunk);
        cr.prediction = identify(NormalizedText::assume_normalized(cr.text), profiles,
                                 config.min_chars)
                            .front();
        cr.reliable = cr.prediction.lang != kUndetermined;
        labels.push_back(cr.prediction.lang);
        result.chunks.push_back(std::move(cr));
    }
    result.tag = aggregate(labels);
    result.code_switched = result.tag.size() >= 2;
    return result;
}

std::vector<DetectionResult> detect_batch(std::span<const Document> docs,
                                          const ProfileSet& profiles,
                                          const DetectConfig& config, unsigned threads) {
    if (profiles.empty()) throw Error(ErrorCode::EmptyProfileSet, "profile set is empty");
    std::vector<DetectionResult> results(docs.size());
    if (docs.empty()) return results;

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, docs.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < docs.size(); i = next++) {
            try {
                results[i] = detect(docs[i], profiles, config);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = docs.size();
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace codemix
