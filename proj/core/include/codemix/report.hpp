#pragma once

#include <optional>
#include <string>

#include "codemix/chi_square.hpp"
#include "codemix/corpus.hpp"
#include "codemix/detector.hpp"
#include "codemix/eval.hpp"

namespace codemix {

/// Everything `evaluate` reports for one labelled dataset.
struct EvaluationSummary {
    ConfusionMatrix matrix;
    EvalReport report;
    double majority_baseline = 0.0;
    LabelDistribution gold_distribution;
    std::optional<ChiSquareResult> chi_square;
};

// JSON renderings are compact single-line documents; tables are aligned text.

std::string to_json(const EvaluationSummary& summary);
std::string to_table(const EvaluationSummary& summary);

std::string to_json(const ChiSquareResult& result);
std::string to_table(const ChiSquareResult& result);

std::string to_json(const LabelDistribution& dist);
std::string to_table(const LabelDistribution& dist);

/// JSONL record for a detection: id, text, gold tags if any, pred, chunks.
std::string to_json(const DetectionResult& result, const Document& doc);

}  // namespace codemix
