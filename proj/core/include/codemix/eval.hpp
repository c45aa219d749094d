#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "codemix/classes.hpp"
#include "codemix/language_tag.hpp"

namespace codemix {

/// counts[g][p] = documents with gold class g predicted as class p.
struct ConfusionMatrix {
    std::vector<std::string> classes;
    std::vector<std::vector<std::uint64_t>> counts;

    std::size_t size() const noexcept { return classes.size(); }
    std::uint64_t total() const;
    std::uint64_t trace() const;
    std::uint64_t row_sum(std::size_t gold) const;
    std::uint64_t column_sum(std::size_t pred) const;
    /// Index of a class name, or size() if absent.
    std::size_t index_of(std::string_view cls) const;
};

/// Exact set-match tally of composite tags. Throws LengthMismatch, EmptyInput.
ConfusionMatrix confusion(std::span<const LanguageTag> gold,
                          std::span<const LanguageTag> pred,
                          const ClassScheme& scheme = {});

struct ClassMetrics {
    std::string cls;
    double precision = 0.0;
    double recall = 0.0;
    std::uint64_t support = 0;
    /// Nothing was predicted as this class; precision reported as 0.
    bool no_predictions = false;
};

struct EvalReport {
    double accuracy = 0.0;
    double weighted_precision = 0.0;
    double weighted_recall = 0.0;
    std::vector<ClassMetrics> per_class;  // in matrix class order
    std::uint64_t total = 0;
};

/// Accuracy and support-weighted precision/recall. Precision of a class that
/// was never predicted counts as 0. Throws EmptyMatrix.
EvalReport metrics(const ConfusionMatrix& matrix);

/// Share of the most frequent gold class. Throws EmptyInput.
double majority_baseline(std::span<const LanguageTag> gold, const ClassScheme& scheme = {});

}  // namespace codemix
