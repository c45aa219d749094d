#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "codemix/text_norm.hpp"

namespace codemix {

inline constexpr int kMaxOrder = 6;
inline constexpr std::string_view kUndetermined = "und";

/// True for 2-3 lowercase ASCII letters other than the reserved "und".
bool is_valid_language_code(std::string_view code);

struct TrainConfig {
    int n_min = 1;
    int n_max = 4;
    double alpha = 0.5;
};

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

using GramCounts =
    std::unordered_map<std::string, std::uint64_t, StringHash, std::equal_to<>>;

/// Character n-gram counts for one language with additive smoothing.
///
/// Grams are codepoint sequences of length n_min..n_max stored as UTF-8.
/// Per-order totals and distinct-gram counts are derived from the table at
/// construction; the object is immutable afterwards.
class LanguageProfile {
public:
    static constexpr int kFormatVersion = 1;

    /// Throws InvalidConfig on bad code/orders/alpha and MalformedProfile when
    /// a key's length falls outside [n_min, n_max].
    LanguageProfile(std::string lang, int n_min, int n_max, double alpha,
                    GramCounts counts);

    const std::string& lang() const noexcept { return lang_; }
    int n_min() const noexcept { return n_min_; }
    int n_max() const noexcept { return n_max_; }
    double alpha() const noexcept { return alpha_; }
    int version() const noexcept { return kFormatVersion; }

    const GramCounts& counts() const noexcept { return counts_; }
    std::uint64_t count(std::string_view gram) const;

    /// Sum of counts over grams of the given order (0 outside the range).
    std::uint64_t total(int order) const;
    /// Number of distinct grams of the given order.
    std::uint64_t distinct(int order) const;

    /// Smoothed log probability of a gram of the given order:
    /// log((c + alpha) / (total + alpha * (distinct + 1))).
    double log_prob(std::string_view gram, int order) const;

    friend bool operator==(const LanguageProfile& a, const LanguageProfile& b);

private:
    std::string lang_;
    int n_min_;
    int n_max_;
    double alpha_;
    GramCounts counts_;
    std::vector<std::uint64_t> totals_;    // indexed by order
    std::vector<std::uint64_t> distinct_;  // indexed by order
    std::vector<double> denominator_;  // indexed by order
};

/// Calls `fn(gram, order)` for every contiguous codepoint n-gram of the text,
/// order by order from n_min to n_max. Spaces are ordinary symbols.
void for_each_gram(const NormalizedText& text, int n_min, int n_max,
                   const std::function<void(std::string_view, int)>& fn);

/// Number of grams `for_each_gram` would visit.
std::size_t gram_count(const NormalizedText& text, int n_min, int n_max);

/// Normalizes every line and counts its grams. Throws EmptyCorpus when no line
/// survives normalization, InvalidConfig on bad parameters.
LanguageProfile train(std::span<const std::string> lines, std::string lang,
                      const TrainConfig& config = {});

/// Mean natural-log probability over all grams of all orders.
/// Throws EmptyText when the text yields no grams.
double score(const NormalizedText& text, const LanguageProfile& profile);

/// Self-describing JSON document; keys sorted, so output is canonical.
std::string serialize_profile(const LanguageProfile& profile);
/// Throws UnsupportedVersion for a foreign version and MalformedProfile for
/// structural problems (including totals that disagree with the counts).
LanguageProfile parse_profile(std::string_view document);

void save_profile(const LanguageProfile& profile, const std::filesystem::path& path);
LanguageProfile load_profile(const std::filesystem::path& path);

}  // namespace codemix
