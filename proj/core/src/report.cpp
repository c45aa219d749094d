#include "codemix/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace codemix {

namespace {

using ojson = nlohmann::ordered_json;

std::string dump(const ojson& j) {
    return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string fixed(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Left-aligned first column, right-aligned others.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto pad = std::string(width[i] - row[i].size(), ' ');
            if (i > 0) line += "  ";
            line += i == 0 ? row[i] + pad : pad + row[i];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

ojson chi_json(const ChiSquareResult& r) {
    ojson j;
    j["statistic"] = r.statistic;
    j["df"] = r.df;
    j["p_value"] = r.p_value;
    j["p_display"] = format_p_value(r.p_value);
    return j;
}

ojson distribution_json(const LabelDistribution& d) {
    ojson j;
    j["total"] = d.total;
    j["classes"] = d.classes;
    j["counts"] = d.counts;
    j["proportions"] = d.proportions;
    return j;
}

}  // namespace

std::string to_json(const ChiSquareResult& result) { return dump(chi_json(result)); }

std::string to_table(const ChiSquareResult& result) {
    std::string p = format_p_value(result.p_value);
    if (p.front() != '<') p = "= " + p;
    return render_table({{"X-squared", fixed(result.statistic, 3)},
                         {"df", std::to_string(result.df)},
                         {"p-value", p}});
}

std::string to_json(const LabelDistribution& dist) { return dump(distribution_json(dist)); }

std::string to_table(const LabelDistribution& dist) {
    std::vector<std::vector<std::string>> rows{{"class", "count", "percent"}};
    for (std::size_t i = 0; i < dist.classes.size(); ++i) {
        rows.push_back({dist.classes[i], std::to_string(dist.counts[i]),
                        fixed(100.0 * dist.proportions[i], 2)});
    }
    rows.push_back({"total", std::to_string(dist.total), fixed(100.0, 2)});
    return render_table(rows);
}

std::string to_json(const EvaluationSummary& s) {
    ojson j;
    j["n"] = s.report.total;
    j["classes"] = s.matrix.classes;
    j["confusion"] = s.matrix.counts;
    j["accuracy"] = s.report.accuracy;
    j["weighted_precision"] = s.report.weighted_precision;
    j["weighted_recall"] = s.report.weighted_recall;
    j["majority_baseline"] = s.majority_baseline;

    ojson per_class = ojson::array();
    ojson notes = ojson::array();
    for (const auto& c : s.report.per_class) {
        ojson e;
        e["class"] = c.cls;
        e["precision"] = c.precision;
        e["recall"] = c.recall;
        e["support"] = c.support;
        e["no_predictions"] = c.no_predictions;
        per_class.push_back(std::move(e));
        if (c.no_predictions && c.support > 0) {
            notes.push_back("class '" + c.cls + "' was never predicted; its precision counts as 0");
        }
    }
    j["per_class"] = std::move(per_class);
    j["gold_distribution"] = distribution_json(s.gold_distribution);
    if (s.chi_square) j["chi_square"] = chi_json(*s.chi_square);
    j["notes"] = std::move(notes);
    return dump(j);
}

std::string to_table(const EvaluationSummary& s) {
    std::ostringstream out;
    out << "documents: " << s.report.total << "\n\n";

    std::vector<std::vector<std::string>> matrix{{"gold \\ pred"}};
    for (const auto& c : s.matrix.classes) matrix[0].push_back(c);
    for (std::size_t g = 0; g < s.matrix.size(); ++g) {
        std::vector<std::string> row{s.matrix.classes[g]};
        for (auto c : s.matrix.counts[g]) row.push_back(std::to_string(c));
        matrix.push_back(std::move(row));
    }
    out << render_table(matrix) << '\n';

    std::vector<std::vector<std::string>> per{{"class", "precision", "recall", "support"}};
    for (const auto& c : s.report.per_class) {
        per.push_back({c.cls, fixed(c.precision) + (c.no_predictions && c.support > 0 ? "*" : ""),
                       fixed(c.recall), std::to_string(c.support)});
    }
    out << render_table(per);
    if (std::any_of(s.report.per_class.begin(), s.report.per_class.end(),
                    [](const ClassMetrics& c) { return c.no_predictions && c.support > 0; })) {
        out << "* never predicted; precision counted as 0\n";
    }
    out << '\n';

    out << render_table({{"accuracy", fixed(s.report.accuracy)},
                         {"weighted precision", fixed(s.report.weighted_precision)},
                         {"weighted recall", fixed(s.report.weighted_recall)},
                         {"majority baseline", fixed(s.majority_baseline)}});
    if (s.chi_square) {
        out << "\ngold distribution vs expected proportions\n" << to_table(*s.chi_square);
    }
    return out.str();
}

std::string to_json(const DetectionResult& result, const Document& doc) {
    ojson j;
    j["id"] = doc.id;
    j["text"] = doc.text;
    if (doc.gold_tag) j["tags"] = doc.gold_tag->str();
    j["pred"] = result.tag.str();
    j["code_switched"] = result.code_switched;
    ojson chunks = ojson::array();
    for (const auto& c : result.chunks) {
        ojson e;
        e["index"] = c.index;
        e["text"] = c.text;
        e["lang"] = c.prediction.lang;
        e["confidence"] = c.prediction.confidence;
        e["avg_log_likelihood"] = c.prediction.avg_log_likelihood;
        e["reliable"] = c.reliable;
        chunks.push_back(std::move(e));
    }
    j["chunks"] = std::move(chunks);
    return dump(j);
}

}  // namespace codemix
