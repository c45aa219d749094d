#include "codemix/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "codemix/error.hpp"
#include "codemix/random.hpp"
#include "codemix/text_norm.hpp"

namespace codemix {

CorpusFormat parse_corpus_format(std::string_view name) {
    if (name == "jsonl") return CorpusFormat::Jsonl;
    if (name == "csv") return CorpusFormat::Csv;
    throw Error(ErrorCode::InvalidConfig, "unknown corpus format '" + std::string(name) + "'");
}

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::optional<LanguageTag> parse_tag_field(std::string_view value, std::size_t line) {
    if (value.empty()) return std::nullopt;
    try {
        return LanguageTag::parse(value);
    } catch (const Error& e) {
        parse_error(line, e.what());
    }
}

class IdRegistry {
public:
    void add(const std::string& id, std::size_t line) {
        if (!seen_.insert(id).second) parse_error(line, "duplicate document id '" + id + "'");
    }

private:
    std::unordered_set<std::string> seen_;
};

std::optional<std::string> json_scalar(const nlohmann::json& obj, const std::string& key,
                                       std::size_t line) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (it->is_string()) return it->get<std::string>();
    if (it->is_number_integer()) return it->dump();
    if (it->is_array()) {
        std::string joined;
        for (const auto& v : *it) {
            if (!v.is_string()) parse_error(line, "field '" + key + "' must hold strings");
            if (!joined.empty()) joined.push_back(',');
            joined += v.get<std::string>();
        }
        return joined;
    }
    parse_error(line, "field '" + key + "' has an unsupported type");
}

std::vector<Document> read_jsonl(std::istream& in, const LoadOptions& options) {
    std::vector<Document> docs;
    IdRegistry ids;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.find_first_not_of(" \t") == std::string::npos) continue;

        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(raw);
        } catch (const nlohmann::json::parse_error& e) {
            parse_error(line, std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object()) parse_error(line, "expected a JSON object");

        Document doc;
        auto it = obj.find(options.text_field);
        if (it == obj.end() || !it->is_string()) {
            throw Error(ErrorCode::MissingField, "line " + std::to_string(line) +
                                                     ": missing string field '" +
                                                     options.text_field + "'");
        }
        doc.text = it->get<std::string>();

        std::optional<std::string> id;
        if (options.id_field) id = json_scalar(obj, *options.id_field, line);
        doc.id = id ? *id : std::to_string(docs.size());
        ids.add(doc.id, line);

        if (options.tag_field) {
            if (auto v = json_scalar(obj, *options.tag_field, line)) doc.gold_tag = parse_tag_field(*v, line);
        }
        if (options.pred_field) {
            if (auto v = json_scalar(obj, *options.pred_field, line)) doc.pred_tag = parse_tag_field(*v, line);
        }
        docs.push_back(std::move(doc));
    }
    return docs;
}

// RFC 4180 records; quoted fields may span lines. Returns false at EOF.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields, std::size_t& line) {
    fields.clear();
    int c = in.get();
    if (c == EOF) return false;
    ++line;
    const std::size_t start_line = line;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    while (true) {
        if (c == EOF) {
            if (quoted) parse_error(start_line, "unterminated quoted field");
            break;
        }
        const char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n') ++line;
                field.push_back(ch);
            }
        } else if (ch == '"') {
            if (!field.empty() || was_quoted) parse_error(line, "unexpected quote inside field");
            quoted = true;
            was_quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
            was_quoted = false;
        } else if (ch == '\n') {
            break;
        } else if (ch == '\r') {
            if (in.peek() == '\n') in.get();
            break;
        } else {
            if (was_quoted) parse_error(line, "text after closing quote");
            field.push_back(ch);
        }
        c = in.get();
    }
    fields.push_back(std::move(field));
    return true;
}

std::vector<Document> read_csv(std::istream& in, const LoadOptions& options) {
    std::vector<Document> docs;
    std::vector<std::string> header;
    std::size_t line = 0;
    if (!read_csv_record(in, header, line)) return docs;
    if (!header.empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) header[0].erase(0, 3);

    auto column = [&](const std::optional<std::string>& name) -> std::optional<std::size_t> {
        if (!name) return std::nullopt;
        auto it = std::find(header.begin(), header.end(), *name);
        if (it == header.end()) return std::nullopt;
        return static_cast<std::size_t>(it - header.begin());
    };
    const auto text_col = column(options.text_field);
    if (!text_col) {
        throw Error(ErrorCode::MissingField,
                    "line 1: CSV header has no column '" + options.text_field + "'");
    }
    const auto id_col = column(options.id_field);
    const auto tag_col = column(options.tag_field);
    const auto pred_col = column(options.pred_field);

    IdRegistry ids;
    std::vector<std::string> fields;
    while (true) {
        const std::size_t record_line = line + 1;
        if (!read_csv_record(in, fields, line)) break;
        if (fields.size() == 1 && fields[0].empty()) continue;
        if (fields.size() != header.size()) {
            parse_error(record_line, "expected " + std::to_string(header.size()) + " fields, found " +
                                         std::to_string(fields.size()));
        }
        Document doc;
        doc.text = fields[*text_col];
        doc.id = id_col && !fields[*id_col].empty() ? fields[*id_col] : std::to_string(docs.size());
        ids.add(doc.id, record_line);
        if (tag_col) doc.gold_tag = parse_tag_field(fields[*tag_col], record_line);
        if (pred_col) doc.pred_tag = parse_tag_field(fields[*pred_col], record_line);
        docs.push_back(std::move(doc));
    }
    return docs;
}

}  // namespace

std::vector<Document> read_corpus(std::istream& in, const LoadOptions& options) {
    return options.format == CorpusFormat::Jsonl ? read_jsonl(in, options) : read_csv(in, options);
}

std::vector<Document> load_corpus(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
    return read_corpus(in, options);
}

void write_jsonl(std::ostream& out, std::span<const Document> docs) {
    for (const auto& doc : docs) {
        nlohmann::ordered_json obj;
        obj["id"] = doc.id;
        obj["text"] = doc.text;
        if (doc.gold_tag) obj["tags"] = doc.gold_tag->str();
        if (doc.pred_tag) obj["pred"] = doc.pred_tag->str();
        out << obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
    }
}

std::vector<Document> dedupe(std::span<const Document> docs) {
    std::vector<Document> out;
    std::unordered_set<std::string> seen;
    for (const auto& doc : docs) {
        if (seen.insert(normalize(doc.text).str()).second) out.push_back(doc);
    }
    return out;
}

bool Stratum::matches(const Document& doc) const {
    if (!doc.pred_tag) return false;
    return std::any_of(allowed.begin(), allowed.end(),
                       [&](const LanguageTag& t) { return t == *doc.pred_tag; });
}

Stratum code_switched_stratum() {
    return Stratum{{LanguageTag({"en", "zu"}), LanguageTag({"en", "xh"}), LanguageTag({"zu", "xh"})}};
}

std::vector<Document> sample(std::span<const Document> docs, const SampleSpec& spec) {
    std::vector<std::size_t> population;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (!spec.stratum || spec.stratum->matches(docs[i])) population.push_back(i);
    }
    if (spec.n > population.size()) {
        throw Error(ErrorCode::InsufficientPopulation,
                    "requested " + std::to_string(spec.n) + " documents but the stratum has " +
                        std::to_string(population.size()));
    }

    Rng rng(spec.seed);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(population.size() - i));
        std::swap(population[i], population[j]);
    }
    population.resize(spec.n);
    std::sort(population.begin(), population.end());

    std::vector<Document> out;
    out.reserve(spec.n);
    for (auto i : population) out.push_back(docs[i]);
    return out;
}

std::optional<double> LabelDistribution::proportion(std::string_view cls) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i] == cls) return proportions[i];
    }
    return std::nullopt;
}

LabelDistribution label_distribution(std::span<const LanguageTag> tags, const ClassScheme& scheme) {
    if (tags.empty()) throw Error(ErrorCode::EmptyInput, "no tags to summarize");

    std::vector<std::string> assigned;
    assigned.reserve(tags.size());
    std::set<std::string> observed;
    for (const auto& t : tags) {
        assigned.push_back(scheme.class_of(t));
        observed.insert(assigned.back());
    }

    LabelDistribution dist;
    dist.classes = scheme.ordered(observed);
    dist.counts.assign(dist.classes.size(), 0);
    for (const auto& cls : assigned) {
        const auto idx = static_cast<std::size_t>(
            std::find(dist.classes.begin(), dist.classes.end(), cls) - dist.classes.begin());
        ++dist.counts[idx];
    }
    dist.total = tags.size();
    for (auto c : dist.counts) {
        dist.proportions.push_back(static_cast<double>(c) / static_cast<double>(dist.total));
    }
    return dist;
}

}  // namespace codemix
