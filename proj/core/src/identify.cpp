#include "codemix/identify.hpp"

#include <algorithm>
#include <cmath>

#include "codemix/error.hpp"
#include "codemix/utf8.hpp"

namespace codemix {

ProfileSet::ProfileSet(std::vector<LanguageProfile> profiles) {
    for (auto& p : profiles) add(std::move(p));
}

void ProfileSet::add(LanguageProfile profile) {
    if (!profiles_.empty() &&
        (profile.n_min() != n_min() || profile.n_max() != n_max())) {
        throw Error(ErrorCode::InvalidConfig,
                    "profile '" + profile.lang() + "' uses orders " +
                        std::to_string(profile.n_min()) + ".." + std::to_string(profile.n_max()) +
                        ", set uses " + std::to_string(n_min()) + ".." + std::to_string(n_max()));
    }
    const std::string lang = profile.lang();
    auto [it, inserted] = profiles_.emplace(lang, std::move(profile));
    if (!inserted) {
        throw Error(ErrorCode::InvalidConfig, "duplicate profile for language '" + lang + "'");
    }
}

ProfileSet ProfileSet::load_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        throw Error(ErrorCode::IoError, "profile directory " + dir.string() + " does not exist");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".profile") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    ProfileSet set;
    for (const auto& f : files) set.add(load_profile(f));
    if (set.empty()) {
        throw Error(ErrorCode::EmptyProfileSet, "no *.profile files in " + dir.string());
    }
    return set;
}

int ProfileSet::n_min() const {
    if (profiles_.empty()) throw Error(ErrorCode::EmptyProfileSet, "profile set is empty");
    return profiles_.begin()->second.n_min();
}

int ProfileSet::n_max() const {
    if (profiles_.empty()) throw Error(ErrorCode::EmptyProfileSet, "profile set is empty");
    return profiles_.begin()->second.n_max();
}

namespace {

std::vector<Prediction> undetermined() {
    return {Prediction{std::string(kUndetermined), 0.0, 1.0}};
}

std::size_t letter_count(const NormalizedText& text) {
    const auto& s = text.str();
    return utf8::length(s) - static_cast<std::size_t>(std::count(s.begin(), s.end(), ' '));
}

}  // namespace

std::vector<Prediction> identify(const NormalizedText& text, const ProfileSet& profiles,
                                 int min_chars) {
    if (profiles.empty()) throw Error(ErrorCode::EmptyProfileSet, "profile set is empty");

    if (letter_count(text) < static_cast<std::size_t>(std::max(min_chars, 0)) ||
        gram_count(text, profiles.n_min(), profiles.n_max()) == 0) {
        return undetermined();
    }

    std::vector<Prediction> out;
    out.reserve(profiles.size());
    for (const auto& [lang, profile] : profiles.profiles()) {
        out.push_back(Prediction{lang, score(text, profile), 0.0});
    }

    // Map iteration gives ascending codes, so a stable sort on the score
    // leaves ties in lexicographic order.
    std::stable_sort(out.begin(), out.end(), [](const Prediction& a, const Prediction& b) {
        return a.avg_log_likelihood > b.avg_log_likelihood;
    });

    const double best = out.front().avg_log_likelihood;
    double z = 0.0;
    for (auto& p : out) {
        p.confidence = std::exp(p.avg_log_likelihood - best);
        z += p.confidence;
    }
    for (auto& p : out) p.confidence /= z;
    return out;
}

std::vector<Prediction> identify(std::string_view raw, const ProfileSet& profiles,
                                 int min_chars) {
    return identify(normalize(raw), profiles, min_chars);
}

}  // namespace codemix
