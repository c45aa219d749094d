#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "codemix/profile.hpp"
#include "codemix/text_norm.hpp"

namespace codemix {

struct Prediction {
    std::string lang;
    double avg_log_likelihood = 0.0;
    double confidence = 0.0;
};

/// Languages to choose between. All members share the same n-gram orders.
class ProfileSet {
public:
    ProfileSet() = default;
    explicit ProfileSet(std::vector<LanguageProfile> profiles);

    /// Throws InvalidConfig on a duplicate language or mismatched orders.
    void add(LanguageProfile profile);

    /// Loads every `*.profile` file in the directory (non-recursive).
    static ProfileSet load_directory(const std::filesystem::path& dir);

    bool empty() const noexcept { return profiles_.empty(); }
    std::size_t size() const noexcept { return profiles_.size(); }
    int n_min() const;
    int n_max() const;

    const std::map<std::string, LanguageProfile, std::less<>>& profiles() const noexcept {
        return profiles_;
    }

private:
    std::map<std::string, LanguageProfile, std::less<>> profiles_;
};

inline constexpr int kDefaultMinChars = 3;

/// Ranks languages for the text, best first.
///
/// Returns the single prediction {"und", confidence 1} when the normalized
/// text has fewer than `min_chars` non-space codepoints or yields no grams.
/// Confidences are a softmax over the mean log-likelihoods; ties are broken by
/// ascending language code. Throws EmptyProfileSet.
std::vector<Prediction> identify(std::string_view raw, const ProfileSet& profiles,
                                 int min_chars = kDefaultMinChars);

std::vector<Prediction> identify(const NormalizedText& text, const ProfileSet& profiles,
                                 int min_chars = kDefaultMinChars);

}  // namespace codemix
