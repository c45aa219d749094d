#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codemix/classes.hpp"
#include "codemix/document.hpp"
#include "codemix/language_tag.hpp"

namespace codemix {

enum class CorpusFormat { Jsonl, Csv };

CorpusFormat parse_corpus_format(std::string_view name);

struct LoadOptions {
    CorpusFormat format = CorpusFormat::Jsonl;
    std::string text_field = "text";
    std::optional<std::string> id_field = "id";
    std::optional<std::string> tag_field = "tags";
    std::optional<std::string> pred_field = "pred";
};

/// One Document per record. Records without an id get their 0-based record
/// index; tag fields hold comma-joined codes. Throws ParseError (message
/// carries the line number), MissingField, or IoError.
std::vector<Document> read_corpus(std::istream& in, const LoadOptions& options);
std::vector<Document> load_corpus(const std::filesystem::path& path,
                                  const LoadOptions& options);

/// One JSON object per line with fields id, text and, when present, tags/pred.
void write_jsonl(std::ostream& out, std::span<const Document> docs);

/// Keeps the first document of each normalized-text class, in input order.
std::vector<Document> dedupe(std::span<const Document> docs);

/// Documents whose predicted tag is set-equal to one of `allowed`.
/// Documents without a predicted tag never match.
struct Stratum {
    std::vector<LanguageTag> allowed;

    bool matches(const Document& doc) const;
};

/// {en,zu}, {en,xh} and {zu,xh}.
Stratum code_switched_stratum();

struct SampleSpec {
    std::size_t n = 400;
    std::uint64_t seed = 42;
    std::optional<Stratum> stratum;
};

/// Uniform sample without replacement from the stratum (partial Fisher-Yates
/// over stratum positions driven by `Rng`), returned in corpus order.
/// Throws InsufficientPopulation when the stratum is smaller than n.
std::vector<Document> sample(std::span<const Document> docs, const SampleSpec& spec);

struct LabelDistribution {
    std::vector<std::string> classes;
    std::vector<std::uint64_t> counts;
    std::vector<double> proportions;
    std::uint64_t total = 0;

    std::optional<double> proportion(std::string_view cls) const;
};

/// Class proportions over composite tags. Declared classes appear even when
/// unobserved. Throws EmptyInput.
LabelDistribution label_distribution(std::span<const LanguageTag> tags,
                                     const ClassScheme& scheme = {});

}  // namespace codemix
