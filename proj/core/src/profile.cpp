#include "codemix/profile.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "codemix/error.hpp"
#include "codemix/utf8.hpp"

namespace codemix {

namespace {

constexpr std::string_view kFormatName = "codemix-profile";

void check_config(int n_min, int n_max, double alpha) {
    if (n_min < 1 || n_max < n_min || n_max > kMaxOrder) {
        throw Error(ErrorCode::InvalidConfig,
                    "n-gram orders must satisfy 1 <= n_min <= n_max <= " +
                        std::to_string(kMaxOrder) + " (got " + std::to_string(n_min) +
                        ".." + std::to_string(n_max) + ")");
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw Error(ErrorCode::InvalidConfig, "smoothing alpha must be a positive finite number");
    }
}

// Byte offsets of each codepoint start, plus the end offset.
std::vector<std::size_t> codepoint_offsets(std::string_view s) {
    std::vector<std::size_t> offsets;
    offsets.reserve(s.size() + 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) offsets.push_back(i);
    }
    offsets.push_back(s.size());
    return offsets;
}

}  // namespace

bool is_valid_language_code(std::string_view code) {
    if (code.size() < 2 || code.size() > 3 || code == kUndetermined) return false;
    for (char c : code) {
        if (c < 'a' || c > 'z') return false;
    }
    return true;
}

LanguageProfile::LanguageProfile(std::string lang, int n_min, int n_max, double alpha,
                                 GramCounts counts)
    : lang_(std::move(lang)), n_min_(n_min), n_max_(n_max), alpha_(alpha),
      counts_(std::move(counts)) {
    if (!is_valid_language_code(lang_)) {
        throw Error(ErrorCode::InvalidConfig, "invalid language code '" + lang_ + "'");
    }
    check_config(n_min_, n_max_, alpha_);

    totals_.assign(kMaxOrder + 1, 0);
    distinct_.assign(kMaxOrder + 1, 0);
    for (const auto& [gram, count] : counts_) {
        const auto order = utf8::length(gram);
        if (order < static_cast<std::size_t>(n_min_) || order > static_cast<std::size_t>(n_max_)) {
            throw Error(ErrorCode::MalformedProfile,
                        "gram '" + gram + "' has order " + std::to_string(order) +
                            " outside [" + std::to_string(n_min_) + ", " +
                            std::to_string(n_max_) + "]");
        }
        totals_[order] += count;
        distinct_[order] += 1;
    }
    denominator_.assign(kMaxOrder + 1, 0.0);
    for (int n = n_min_; n <= n_max_; ++n) {
        denominator_[n] = static_cast<double>(totals_[n]) +
                              alpha_ * static_cast<double>(distinct_[n] + 1);
    }
}

std::uint64_t LanguageProfile::count(std::string_view gram) const {
    auto it = counts_.find(gram);
    return it == counts_.end() ? 0 : it->second;
}

std::uint64_t LanguageProfile::total(int order) const {
    return order >= 0 && order <= kMaxOrder ? totals_[order] : 0;
}

std::uint64_t LanguageProfile::distinct(int order) const {
    return order >= 0 && order <= kMaxOrder ? distinct_[order] : 0;
}

double LanguageProfile::log_prob(std::string_view gram, int order) const {
    // Divide before the log so the value matches a direct evaluation.
    const double numerator = static_cast<double>(count(gram)) + alpha_;
    return std::log(numerator / denominator_[order]);
}

bool operator==(const LanguageProfile& a, const LanguageProfile& b) {
    return a.lang_ == b.lang_ && a.n_min_ == b.n_min_ && a.n_max_ == b.n_max_ &&
           a.alpha_ == b.alpha_ && a.counts_ == b.counts_;
}

void for_each_gram(const NormalizedText& text, int n_min, int n_max,
                   const std::function<void(std::string_view, int)>& fn) {
    const std::string_view s = text.str();
    const auto offsets = codepoint_offsets(s);
    const std::size_t cps = offsets.size() - 1;
    for (int n = n_min; n <= n_max; ++n) {
        const auto order = static_cast<std::size_t>(n);
        if (cps < order) break;
        for (std::size_t i = 0; i + order <= cps; ++i) {
            fn(s.substr(offsets[i], offsets[i + order] - offsets[i]), n);
        }
    }
}

std::size_t gram_count(const NormalizedText& text, int n_min, int n_max) {
    const std::size_t cps = utf8::length(text.str());
    std::size_t total = 0;
    for (int n = n_min; n <= n_max; ++n) {
        const auto order = static_cast<std::size_t>(n);
        if (cps >= order) total += cps - order + 1;
    }
    return total;
}

LanguageProfile train(std::span<const std::string> lines, std::string lang,
                      const TrainConfig& config) {
    check_config(config.n_min, config.n_max, config.alpha);
    if (!is_valid_language_code(lang)) {
        throw Error(ErrorCode::InvalidConfig, "invalid language code '" + lang + "'");
    }

    GramCounts counts;
    bool any = false;
    for (const auto& line : lines) {
        const auto text = normalize(line);
        if (text.empty()) continue;
        any = true;
        for_each_gram(text, config.n_min, config.n_max, [&](std::string_view gram, int) {
            auto it = counts.find(gram);
            if (it == counts.end()) {
                counts.emplace(std::string(gram), 1);
            } else {
                ++it->second;
            }
        });
    }
    if (!any) {
        throw Error(ErrorCode::EmptyCorpus,
                    "no training line for '" + lang + "' is non-empty after normalization");
    }
    return LanguageProfile(std::move(lang), config.n_min, config.n_max, config.alpha,
                           std::move(counts));
}

double score(const NormalizedText& text, const LanguageProfile& profile) {
    double sum = 0.0;
    std::size_t n = 0;
    for_each_gram(text, profile.n_min(), profile.n_max(), [&](std::string_view gram, int order) {
        sum += profile.log_prob(gram, order);
        ++n;
    });
    if (n == 0) {
        throw Error(ErrorCode::EmptyText, "text yields no n-grams of order >= " +
                                              std::to_string(profile.n_min()));
    }
    return sum / static_cast<double>(n);
}

std::string serialize_profile(const LanguageProfile& profile) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [gram, count] : profile.counts()) counts[gram] = count;

    nlohmann::json totals = nlohmann::json::object();
    for (int n = profile.n_min(); n <= profile.n_max(); ++n) {
        totals[std::to_string(n)] = profile.total(n);
    }

    nlohmann::json doc = {
        {"format", kFormatName},
        {"version", profile.version()},
        {"lang", profile.lang()},
        {"n_min", profile.n_min()},
        {"n_max", profile.n_max()},
        {"alpha", profile.alpha()},
        {"totals", std::move(totals)},
        {"counts", std::move(counts)},
    };
    return doc.dump(1, '\t') + "\n";
}

LanguageProfile parse_profile(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedProfile, std::string("profile is not valid JSON: ") + e.what());
    }

    try {
        if (!doc.is_object() || doc.value("format", "") != kFormatName) {
            throw Error(ErrorCode::MalformedProfile, "not a codemix profile document");
        }
        const int version = doc.at("version").get<int>();
        if (version != LanguageProfile::kFormatVersion) {
            throw Error(ErrorCode::UnsupportedVersion,
                        "profile version " + std::to_string(version) + " is not supported (expected " +
                            std::to_string(LanguageProfile::kFormatVersion) + ")");
        }

        GramCounts counts;
        for (const auto& [gram, count] : doc.at("counts").items()) {
            counts.emplace(gram, count.get<std::uint64_t>());
        }
        LanguageProfile profile(doc.at("lang").get<std::string>(), doc.at("n_min").get<int>(),
                                doc.at("n_max").get<int>(), doc.at("alpha").get<double>(),
                                std::move(counts));

        const auto& totals = doc.at("totals");
        for (int n = profile.n_min(); n <= profile.n_max(); ++n) {
            const auto stored = totals.at(std::to_string(n)).get<std::uint64_t>();
            if (stored != profile.total(n)) {
                throw Error(ErrorCode::MalformedProfile,
                            "total for order " + std::to_string(n) + " is " + std::to_string(stored) +
                                " but counts sum to " + std::to_string(profile.total(n)));
            }
        }
        return profile;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedProfile, std::string("malformed profile: ") + e.what());
    }
}

void save_profile(const LanguageProfile& profile, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << serialize_profile(profile);
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

LanguageProfile load_profile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str());
}

}  // namespace codemix
