#include "codemix/synthgen.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <unordered_set>

#include "codemix/error.hpp"
#include "codemix/profile.hpp"
#include "codemix/random.hpp"
#include "codemix/utf8.hpp"

namespace codemix {

namespace {

void validate(const MixSpec& spec) {
    if (!is_valid_language_code(spec.lang_a) || !is_valid_language_code(spec.lang_b) ||
        spec.lang_a == spec.lang_b) {
        throw Error(ErrorCode::InvalidSpec, "mix needs two distinct valid language codes");
    }
    if (spec.source_a.empty() || spec.source_b.empty()) {
        throw Error(ErrorCode::InvalidSpec, "token pools must be non-empty");
    }
    if (spec.tokens_per_doc < 4) throw Error(ErrorCode::InvalidSpec, "tokens_per_doc must be >= 4");
    if (spec.n_docs == 0) throw Error(ErrorCode::InvalidSpec, "n_docs must be positive");
    if (!(spec.mix_rate >= 0.0 && spec.mix_rate <= 1.0)) {
        throw Error(ErrorCode::InvalidSpec, "mix_rate must lie in [0, 1]");
    }
    const std::unordered_set<std::string> pool_a(spec.source_a.begin(), spec.source_a.end());
    for (const auto& t : spec.source_b) {
        if (pool_a.count(t)) throw Error(ErrorCode::InvalidSpec, "token '" + t + "' is in both pools");
    }
    for (const auto* pool : {&spec.source_a, &spec.source_b}) {
        for (const auto& t : *pool) {
            if (t.empty() || t.find_first_of(" \t\r\n") != std::string::npos) {
                throw Error(ErrorCode::InvalidSpec, "pool tokens must be non-empty single words");
            }
        }
    }
}

const std::string& pick(Rng& rng, const std::vector<std::string>& pool) {
    return pool[rng.below(pool.size())];
}

}  // namespace

std::vector<Document> generate(const MixSpec& spec) {
    validate(spec);
    Rng rng(spec.seed);
    const int width = std::max(1, static_cast<int>(std::to_string(spec.n_docs - 1).size()));

    std::vector<Document> docs;
    docs.reserve(spec.n_docs);
    for (std::size_t d = 0; d < spec.n_docs; ++d) {
        std::vector<const std::vector<std::string>*> source(spec.tokens_per_doc);
        Document doc;
        char id[32];
        std::snprintf(id, sizeof id, "syn-%0*zu", width, d);
        doc.id = id;

        if (rng.bernoulli(spec.mix_rate)) {
            const auto split = static_cast<std::size_t>(rng.between(1, spec.tokens_per_doc - 1));
            for (std::size_t i = 0; i < spec.tokens_per_doc; ++i) {
                source[i] = i < split ? &spec.source_a : &spec.source_b;
            }
            doc.gold_tag = LanguageTag({spec.lang_a, spec.lang_b});
        } else {
            const bool first = rng.bernoulli(0.5);
            std::fill(source.begin(), source.end(), first ? &spec.source_a : &spec.source_b);
            doc.gold_tag = LanguageTag({first ? spec.lang_a : spec.lang_b});
        }
        for (std::size_t i = 0; i < spec.tokens_per_doc; ++i) {
            if (i > 0) doc.text.push_back(' ');
            doc.text += pick(rng, *source[i]);
        }
        docs.push_back(std::move(doc));
    }
    return docs;
}

std::vector<std::string> make_lexicon(std::u32string_view alphabet, std::size_t words,
                                      std::size_t min_len, std::size_t max_len,
                                      std::uint64_t seed) {
    const std::set<char32_t> letters(alphabet.begin(), alphabet.end());
    if (letters.empty() || min_len == 0 || max_len < min_len) {
        throw Error(ErrorCode::InvalidSpec, "lexicon needs a non-empty alphabet and 1 <= min_len <= max_len");
    }
    double capacity = 0.0;
    for (std::size_t len = min_len; len <= max_len; ++len) {
        capacity += std::pow(static_cast<double>(letters.size()), static_cast<double>(len));
    }
    if (capacity < 2.0 * static_cast<double>(words)) {
        throw Error(ErrorCode::InvalidSpec, "alphabet too small for the requested lexicon size");
    }

    const std::u32string symbols(letters.begin(), letters.end());
    Rng rng(seed);
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    while (out.size() < words) {
        const auto len = static_cast<std::size_t>(rng.between(min_len, max_len));
        std::u32string w;
        for (std::size_t i = 0; i < len; ++i) w.push_back(symbols[rng.below(symbols.size())]);
        auto s = utf8::encode(w);
        if (seen.insert(s).second) out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::string> make_sentences(std::span<const std::string> lexicon, std::size_t lines,
                                        std::size_t tokens_per_line, std::uint64_t seed) {
    if (lexicon.empty() || tokens_per_line == 0) {
        throw Error(ErrorCode::InvalidSpec, "sentences need a non-empty lexicon and tokens_per_line > 0");
    }
    Rng rng(seed);
    std::vector<std::string> out;
    out.reserve(lines);
    for (std::size_t l = 0; l < lines; ++l) {
        std::string line;
        for (std::size_t t = 0; t < tokens_per_line; ++t) {
            if (t > 0) line.push_back(' ');
            line += lexicon[rng.below(lexicon.size())];
        }
        out.push_back(std::move(line));
    }
    return out;
}

}  // namespace codemix
