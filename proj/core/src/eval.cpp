#include "codemix/eval.hpp"

#include <algorithm>
#include <map>

#include "codemix/error.hpp"

namespace codemix {

std::uint64_t ConfusionMatrix::total() const {
    std::uint64_t t = 0;
    for (const auto& row : counts) {
        for (auto c : row) t += c;
    }
    return t;
}

std::uint64_t ConfusionMatrix::trace() const {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) t += counts[i][i];
    return t;
}

std::uint64_t ConfusionMatrix::row_sum(std::size_t gold) const {
    std::uint64_t t = 0;
    for (auto c : counts.at(gold)) t += c;
    return t;
}

std::uint64_t ConfusionMatrix::column_sum(std::size_t pred) const {
    std::uint64_t t = 0;
    for (const auto& row : counts) t += row.at(pred);
    return t;
}

std::size_t ConfusionMatrix::index_of(std::string_view cls) const {
    return static_cast<std::size_t>(std::find(classes.begin(), classes.end(), cls) - classes.begin());
}

ConfusionMatrix confusion(std::span<const LanguageTag> gold, std::span<const LanguageTag> pred,
                          const ClassScheme& scheme) {
    if (gold.size() != pred.size()) {
        throw Error(ErrorCode::LengthMismatch, "gold has " + std::to_string(gold.size()) +
                                                   " tags but predictions have " +
                                                   std::to_string(pred.size()));
    }
    if (gold.empty()) throw Error(ErrorCode::EmptyInput, "no documents to evaluate");

    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(gold.size());
    std::set<std::string> observed;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        pairs.emplace_back(scheme.class_of(gold[i]), scheme.class_of(pred[i]));
        observed.insert(pairs.back().first);
        observed.insert(pairs.back().second);
    }

    ConfusionMatrix m;
    m.classes = scheme.ordered(observed);
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t i = 0; i < m.classes.size(); ++i) index.emplace(m.classes[i], i);
    m.counts.assign(m.classes.size(), std::vector<std::uint64_t>(m.classes.size(), 0));
    for (const auto& [g, p] : pairs) ++m.counts[index.at(g)][index.at(p)];
    return m;
}

EvalReport metrics(const ConfusionMatrix& matrix) {
    const auto total = matrix.total();
    if (total == 0) throw Error(ErrorCode::EmptyMatrix, "confusion matrix is empty");

    EvalReport r;
    r.total = total;
    const double n = static_cast<double>(total);
    r.accuracy = static_cast<double>(matrix.trace()) / n;

    for (std::size_t c = 0; c < matrix.size(); ++c) {
        ClassMetrics cm;
        cm.cls = matrix.classes[c];
        const auto hit = static_cast<double>(matrix.counts[c][c]);
        const auto row = matrix.row_sum(c);
        const auto col = matrix.column_sum(c);
        cm.support = row;
        cm.no_predictions = col == 0;
        cm.precision = col == 0 ? 0.0 : hit / static_cast<double>(col);
        cm.recall = row == 0 ? 0.0 : hit / static_cast<double>(row);
        if (row > 0) {
            const double weight = static_cast<double>(row) / n;
            r.weighted_precision += weight * cm.precision;
            r.weighted_recall += weight * cm.recall;
        }
        r.per_class.push_back(std::move(cm));
    }
    return r;
}

double majority_baseline(std::span<const LanguageTag> gold, const ClassScheme& scheme) {
    if (gold.empty()) throw Error(ErrorCode::EmptyInput, "no gold tags");
    std::map<std::string, std::uint64_t> freq;
    for (const auto& t : gold) ++freq[scheme.class_of(t)];
    std::uint64_t best = 0;
    for (const auto& [cls, c] : freq) best = std::max(best, c);
    return static_cast<double>(best) / static_cast<double>(gold.size());
}

}  // namespace codemix
