#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "codemix/chi_square.hpp"
#include "codemix/corpus.hpp"
#include "codemix/detector.hpp"
#include "codemix/error.hpp"
#include "codemix/eval.hpp"
#include "codemix/identify.hpp"
#include "codemix/profile.hpp"
#include "codemix/report.hpp"
#include "codemix/synthgen.hpp"
#include "codemix/utf8.hpp"

namespace codemix::cli {

namespace {

enum class Format { Json, Table };

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"table", Format::Table}};

struct CorpusFlags {
    std::string input;
    std::string input_format = "jsonl";
    std::string text_field = "text";
    std::string id_field = "id";
    std::string tag_field = "tags";
    std::string pred_field = "pred";

    void attach(CLI::App* cmd, bool input_required = true) {
        auto* opt = cmd->add_option("--input", input, "Corpus file, or - for stdin");
        if (input_required) opt->required();
        cmd->add_option("--input-format", input_format, "jsonl or csv")
            ->check(CLI::IsMember({"jsonl", "csv"}))
            ->capture_default_str();
        cmd->add_option("--text-field", text_field, "Field holding the message text")
            ->capture_default_str();
        cmd->add_option("--id-field", id_field, "Field holding the document id")
            ->capture_default_str();
        cmd->add_option("--tag-field", tag_field, "Field holding gold tags")->capture_default_str();
        cmd->add_option("--pred-field", pred_field, "Field holding predicted tags")
            ->capture_default_str();
    }

    LoadOptions options() const {
        LoadOptions o;
        o.format = parse_corpus_format(input_format);
        o.text_field = text_field;
        o.id_field = id_field;
        o.tag_field = tag_field;
        o.pred_field = pred_field;
        return o;
    }
};

std::vector<Document> load(const CorpusFlags& flags) {
    if (flags.input == "-") return read_corpus(std::cin, flags.options());
    return load_corpus(flags.input, flags.options());
}

// Writes to the given path, or to `fallback` for "-".
class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (path == "-") {
            stream_ = &fallback;
        } else {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
            if (!*file_) throw Error(ErrorCode::IoError, "cannot write " + path);
            stream_ = file_.get();
        }
    }

    std::ostream& stream() { return *stream_; }

    void finish(const std::string& path) {
        stream_->flush();
        if (!*stream_) throw Error(ErrorCode::IoError, "failed writing " + path);
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path, std::ios::binary);
        if (!file) throw Error(ErrorCode::IoError, "cannot read " + path);
        in = &file;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(*in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
    }
    return lines;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::istringstream is(item);
        T v{};
        if (item.empty() || !(is >> v) || !(is >> std::ws).eof() ||
            (std::is_unsigned_v<T> && item.find('-') != std::string::npos)) {
            throw CLI::ValidationError(what, "cannot parse '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError(what, "empty list");
    return out;
}

ClassScheme scheme_from(const std::string& classes) {
    return classes.empty() ? ClassScheme{} : ClassScheme(parse_tag_list(classes));
}

std::vector<LanguageTag> tags_of(const std::vector<Document>& docs, bool gold) {
    std::vector<LanguageTag> tags;
    tags.reserve(docs.size());
    for (const auto& d : docs) {
        const auto& t = gold ? d.gold_tag : d.pred_tag;
        if (!t) {
            throw Error(ErrorCode::MissingField, "document '" + d.id + "' has no " +
                                                     (gold ? "gold" : "predicted") + " tag");
        }
        tags.push_back(*t);
    }
    return tags;
}

std::string prediction_table(const std::vector<Prediction>& preds) {
    std::ostringstream out;
    std::size_t rank = 1;
    for (const auto& p : preds) {
        char line[128];
        std::snprintf(line, sizeof line, "%2zu  %-4s %.6f  %.5f\n", rank++, p.lang.c_str(),
                      p.confidence, p.avg_log_likelihood);
        out << line;
    }
    return out.str();
}

std::vector<std::string> pool_from(const std::string& file, const std::string& alphabet,
                                   std::size_t size, std::size_t min_len, std::size_t max_len,
                                   std::uint64_t seed) {
    if (!file.empty()) {
        std::vector<std::string> pool;
        for (auto& line : read_lines(file)) {
            std::istringstream words(line);
            std::string w;
            while (words >> w) pool.push_back(w);
        }
        return pool;
    }
    return make_lexicon(utf8::decode(alphabet), size, min_len, max_len, seed);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"codemix: language identification and code-switching detection", "codemix"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    // Each subcommand owns its format slot so defaults differ per command.
    std::map<const CLI::App*, Format> formats;
    Format format = Format::Table;
    auto add_format = [&](CLI::App* cmd, Format def) {
        auto& slot = formats[cmd];
        slot = def;
        cmd->add_option("--format", slot, "json (machine) or table (human)")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    };

    std::function<void()> action;

    // train
    auto* train_cmd = app.add_subcommand("train", "Train a character n-gram profile");
    std::string lang, train_input, train_out;
    TrainConfig train_config;
    train_cmd->add_option("--lang", lang, "Language code")->required();
    train_cmd->add_option("--input", train_input, "Training text, one sentence per line")->required();
    train_cmd->add_option("--out", train_out, "Profile file to write")->required();
    train_cmd->add_option("--nmin", train_config.n_min, "Smallest n-gram order")->capture_default_str();
    train_cmd->add_option("--nmax", train_config.n_max, "Largest n-gram order")->capture_default_str();
    train_cmd->add_option("--alpha", train_config.alpha, "Additive smoothing constant")
        ->capture_default_str();
    train_cmd->callback([&] {
        action = [&] {
            const auto lines = read_lines(train_input);
            const auto profile = train(lines, lang, train_config);
            Output o(train_out, out);
            o.stream() << serialize_profile(profile);
            o.finish(train_out);
        };
    });

    // identify
    auto* identify_cmd = app.add_subcommand("identify", "Rank languages for texts");
    std::string profiles_dir, id_text, id_input, id_out = "-";
    int min_chars = kDefaultMinChars;
    std::size_t top = 0;
    identify_cmd->add_option("--profiles", profiles_dir, "Directory of *.profile files")->required();
    auto* text_opt = identify_cmd->add_option("--text", id_text, "A single text to identify");
    identify_cmd->add_option("--input", id_input, "File with one text per line")->excludes(text_opt);
    identify_cmd->add_option("--out", id_out, "Output path")->capture_default_str();
    identify_cmd->add_option("--min-chars", min_chars, "Minimum letters for a decision")
        ->capture_default_str();
    identify_cmd->add_option("--top", top, "Keep only the best N predictions (0 = all)");
    add_format(identify_cmd, Format::Json);
    identify_cmd->callback([&] {
        action = [&] {
            if (id_text.empty() && id_input.empty()) {
                throw CLI::RequiredError("--text or --input");
            }
            const auto profiles = ProfileSet::load_directory(profiles_dir);
            const auto texts = id_input.empty() ? std::vector<std::string>{id_text} : read_lines(id_input);
            Output o(id_out, out);
            for (const auto& t : texts) {
                auto preds = identify(t, profiles, min_chars);
                if (top > 0 && preds.size() > top) preds.resize(top);
                if (format == Format::Json) {
                    nlohmann::ordered_json j;
                    j["text"] = t;
                    j["predictions"] = nlohmann::ordered_json::array();
                    for (const auto& p : preds) {
                        j["predictions"].push_back({{"lang", p.lang},
                                                    {"confidence", p.confidence},
                                                    {"avg_log_likelihood", p.avg_log_likelihood}});
                    }
                    o.stream() << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
                } else {
                    o.stream() << t << '\n' << prediction_table(preds);
                }
            }
            o.finish(id_out);
        };
    });

    // detect
    auto* detect_cmd = app.add_subcommand("detect", "Chunk-based code-switching detection");
    CorpusFlags detect_flags;
    std::string detect_out = "-";
    DetectConfig detect_config;
    unsigned threads = 0;
    detect_flags.attach(detect_cmd);
    detect_cmd->add_option("--profiles", profiles_dir, "Directory of *.profile files")->required();
    detect_cmd->add_option("--out", detect_out, "Tagged JSONL output")->capture_default_str();
    detect_cmd->add_option("--chunks", detect_config.chunks, "Chunks per document")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    detect_cmd->add_option("--min-chars", detect_config.min_chars, "Minimum letters per chunk")
        ->capture_default_str();
    detect_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    add_format(detect_cmd, Format::Json);
    detect_cmd->callback([&] {
        action = [&] {
            const auto profiles = ProfileSet::load_directory(profiles_dir);
            const auto docs = load(detect_flags);
            const auto results = detect_batch(docs, profiles, detect_config, threads);
            Output o(detect_out, out);
            if (format == Format::Json) {
                for (std::size_t i = 0; i < docs.size(); ++i) {
                    o.stream() << to_json(results[i], docs[i]) << '\n';
                }
            } else {
                for (std::size_t i = 0; i < docs.size(); ++i) {
                    o.stream() << docs[i].id << '\t' << results[i].tag.str() << '\t'
                               << (results[i].code_switched ? "switched" : "mono") << '\n';
                }
            }
            o.finish(detect_out);
        };
    });

    // dedupe
    auto* dedupe_cmd = app.add_subcommand("dedupe", "Drop documents whose normalized text repeats");
    CorpusFlags dedupe_flags;
    std::string dedupe_out = "-";
    dedupe_flags.attach(dedupe_cmd);
    dedupe_cmd->add_option("--out", dedupe_out, "JSONL output")->capture_default_str();
    dedupe_cmd->callback([&] {
        action = [&] {
            const auto docs = dedupe(load(dedupe_flags));
            Output o(dedupe_out, out);
            write_jsonl(o.stream(), docs);
            o.finish(dedupe_out);
        };
    });

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "Seeded sample without replacement");
    CorpusFlags sample_flags;
    std::string sample_out = "-", stratum;
    SampleSpec sample_spec;
    sample_flags.attach(sample_cmd);
    sample_cmd->add_option("--out", sample_out, "JSONL output")->capture_default_str();
    sample_cmd->add_option("--n", sample_spec.n, "Sample size")->capture_default_str();
    sample_cmd->add_option("--seed", sample_spec.seed, "Unsigned seed")->capture_default_str();
    sample_cmd->add_option("--stratum", stratum,
                           "Restrict to predicted tags: 'code-switched' or a ';'-separated tag "
                           "list such as 'en' or 'en,zu;en,xh'");
    sample_cmd->callback([&] {
        action = [&] {
            if (stratum == "code-switched") {
                sample_spec.stratum = code_switched_stratum();
            } else if (!stratum.empty() && stratum != "all") {
                sample_spec.stratum = Stratum{parse_tag_list(stratum)};
            }
            const auto docs = sample(load(sample_flags), sample_spec);
            Output o(sample_out, out);
            write_jsonl(o.stream(), docs);
            o.finish(sample_out);
        };
    });

    // distribution
    auto* dist_cmd = app.add_subcommand("distribution", "Class proportions of gold or predicted tags");
    CorpusFlags dist_flags;
    std::string dist_field = "gold", classes;
    dist_flags.attach(dist_cmd);
    dist_cmd->add_option("--of", dist_field, "gold or pred")
        ->check(CLI::IsMember({"gold", "pred"}))
        ->capture_default_str();
    dist_cmd->add_option("--classes", classes, "Declared classes, e.g. 'en;zu;xh'; others fold into 'other'");
    add_format(dist_cmd, Format::Table);
    dist_cmd->callback([&] {
        action = [&] {
            const auto docs = load(dist_flags);
            const auto d = label_distribution(tags_of(docs, dist_field == "gold"), scheme_from(classes));
            out << (format == Format::Json ? to_json(d) + "\n" : to_table(d));
        };
    });

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "Confusion matrix and weighted metrics");
    CorpusFlags eval_flags;
    std::string expected;
    eval_flags.attach(eval_cmd);
    eval_cmd->add_option("--classes", classes, "Declared classes, e.g. 'en;zu;xh'");
    eval_cmd->add_option("--expected", expected,
                         "Expected class proportions (declared classes then 'other') for a "
                         "chi-square test of the gold distribution");
    add_format(eval_cmd, Format::Table);
    eval_cmd->callback([&] {
        action = [&] {
            const auto docs = load(eval_flags);
            const auto gold = tags_of(docs, true);
            const auto pred = tags_of(docs, false);
            const auto scheme = scheme_from(classes);

            EvaluationSummary s;
            s.matrix = confusion(gold, pred, scheme);
            s.report = metrics(s.matrix);
            s.majority_baseline = majority_baseline(gold, scheme);
            s.gold_distribution = label_distribution(gold, scheme);
            if (!expected.empty()) {
                const auto props = parse_list<double>(expected, "--expected");
                s.chi_square = chi_square_gof(s.gold_distribution.counts, props);
            }
            out << (format == Format::Json ? to_json(s) + "\n" : to_table(s));
        };
    });

    // baseline
    auto* baseline_cmd = app.add_subcommand("baseline", "Majority-class accuracy of gold tags");
    CorpusFlags baseline_flags;
    baseline_flags.attach(baseline_cmd);
    baseline_cmd->add_option("--classes", classes, "Declared classes, e.g. 'en;zu;xh'");
    add_format(baseline_cmd, Format::Table);
    baseline_cmd->callback([&] {
        action = [&] {
            const auto docs = load(baseline_flags);
            const double b = majority_baseline(tags_of(docs, true), scheme_from(classes));
            if (format == Format::Json) {
                out << nlohmann::json{{"majority_baseline", b}, {"n", docs.size()}}.dump() << '\n';
            } else {
                char buf[64];
                std::snprintf(buf, sizeof buf, "majority baseline  %.4f  (n=%zu)\n", b, docs.size());
                out << buf;
            }
        };
    });

    // chisq
    auto* chisq_cmd = app.add_subcommand("chisq", "Chi-square goodness-of-fit test");
    std::string observed_str, expected_str;
    chisq_cmd->add_option("--observed", observed_str, "Observed counts, comma-separated")->required();
    chisq_cmd->add_option("--expected", expected_str, "Expected proportions, comma-separated")
        ->required();
    add_format(chisq_cmd, Format::Table);
    chisq_cmd->callback([&] {
        action = [&] {
            const auto observed = parse_list<std::uint64_t>(observed_str, "--observed");
            const auto props = parse_list<double>(expected_str, "--expected");
            const auto r = chi_square_gof(observed, props);
            out << (format == Format::Json ? to_json(r) + "\n" : to_table(r));
        };
    });

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "Generate a gold-tagged synthetic corpus");
    MixSpec mix;
    std::string pool_a, pool_b, alphabet_a, alphabet_b, synth_out = "-", train_out_a, train_out_b;
    std::size_t lexicon_size = 200, min_len = 2, max_len = 8, train_lines = 300;
    synth_cmd->add_option("--lang-a", mix.lang_a, "First language code")->required();
    synth_cmd->add_option("--lang-b", mix.lang_b, "Second language code")->required();
    auto* pa = synth_cmd->add_option("--pool-a", pool_a, "Word pool file for language a");
    auto* pb = synth_cmd->add_option("--pool-b", pool_b, "Word pool file for language b");
    synth_cmd->add_option("--alphabet-a", alphabet_a, "Build a random lexicon for a from these letters")
        ->excludes(pa);
    synth_cmd->add_option("--alphabet-b", alphabet_b, "Build a random lexicon for b from these letters")
        ->excludes(pb);
    synth_cmd->add_option("--lexicon-size", lexicon_size, "Words per generated lexicon")
        ->capture_default_str();
    synth_cmd->add_option("--min-len", min_len, "Shortest generated word")->capture_default_str();
    synth_cmd->add_option("--max-len", max_len, "Longest generated word")->capture_default_str();
    synth_cmd->add_option("--n-docs", mix.n_docs, "Documents to generate")->capture_default_str();
    synth_cmd->add_option("--mix-rate", mix.mix_rate, "Probability a document is code-mixed")
        ->capture_default_str();
    synth_cmd->add_option("--tokens", mix.tokens_per_doc, "Tokens per document")->capture_default_str();
    synth_cmd->add_option("--seed", mix.seed, "Unsigned seed")->capture_default_str();
    synth_cmd->add_option("--out", synth_out, "JSONL output")->capture_default_str();
    synth_cmd->add_option("--train-out-a", train_out_a, "Also write monolingual training lines for a");
    synth_cmd->add_option("--train-out-b", train_out_b, "Also write monolingual training lines for b");
    synth_cmd->add_option("--train-lines", train_lines, "Training lines per language")
        ->capture_default_str();
    synth_cmd->callback([&] {
        action = [&] {
            if (pool_a.empty() == alphabet_a.empty() || pool_b.empty() == alphabet_b.empty()) {
                throw CLI::ValidationError("synth", "give exactly one of --pool-X / --alphabet-X per language");
            }
            mix.source_a = pool_from(pool_a, alphabet_a, lexicon_size, min_len, max_len, mix.seed + 1);
            mix.source_b = pool_from(pool_b, alphabet_b, lexicon_size, min_len, max_len, mix.seed + 2);
            const auto docs = generate(mix);
            Output o(synth_out, out);
            write_jsonl(o.stream(), docs);
            o.finish(synth_out);

            auto write_training = [&](const std::string& path, const std::vector<std::string>& pool,
                                      std::uint64_t seed) {
                if (path.empty()) return;
                Output t(path, out);
                for (const auto& line : make_sentences(pool, train_lines, 10, seed)) {
                    t.stream() << line << '\n';
                }
                t.finish(path);
            };
            write_training(train_out_a, mix.source_a, mix.seed + 3);
            write_training(train_out_b, mix.source_b, mix.seed + 4);
        };
    });

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "codemix: usage error: " << e.what() << '\n';
        return kUsageError;
    }

    if (auto it = formats.find(app.get_subcommands().front()); it != formats.end()) {
        format = it->second;
    }

    try {
        action();
    } catch (const CLI::Error& e) {
        err << "codemix: usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "codemix: error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kOperationalError;
    } catch (const std::exception& e) {
        err << "codemix: error: " << e.what() << '\n';
        return kOperationalError;
    }
    return kOk;
}

}  // namespace codemix::cli
