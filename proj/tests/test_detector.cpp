#include <doctest.h>

#include <algorithm>
#include <random>

#include "codemix/detector.hpp"
#include "codemix/error.hpp"
#include "codemix/synthgen.hpp"

using namespace codemix;

namespace {

std::vector<std::string> words(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("w" + std::to_string(i));
    return out;
}

std::vector<std::size_t> sizes_of(const std::vector<std::vector<std::string>>& chunks) {
    std::vector<std::size_t> out;
    for (const auto& c : chunks) out.push_back(c.size());
    return out;
}

struct TwoLanguages {
    std::vector<std::string> lex_a = make_lexicon(U"abcdefghijklm", 200, 2, 8, 21);
    std::vector<std::string> lex_b = make_lexicon(U"nopqrstuvwxyz", 200, 2, 8, 22);
    ProfileSet profiles{{train(make_sentences(lex_a, 300, 10, 23), "xa"),
                         train(make_sentences(lex_b, 300, 10, 24), "xb")}};
};

const TwoLanguages& two_languages() {
    static const TwoLanguages fixture;
    return fixture;
}

}  // namespace

TEST_SUITE("detector") {

TEST_CASE("balanced split puts larger chunks first") {
    CHECK(sizes_of(split_chunks(words(10), 4)) == std::vector<std::size_t>{3, 3, 2, 2});
    CHECK(sizes_of(split_chunks(words(3), 4)) == std::vector<std::size_t>{1, 1, 1});
    CHECK(sizes_of(split_chunks(words(8), 4)) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(sizes_of(split_chunks(words(5), 1)) == std::vector<std::size_t>{5});
}

TEST_CASE("split of a code-mixed question") {
    const auto tokens =
        normalize("kuyenzeka yini kuthi umakuqhume condom kuvele kuthi khulelwe after day").tokens();
    REQUIRE(tokens.size() == 10);
    const auto chunks = split_chunks(tokens, 4);
    REQUIRE(chunks.size() == 4);
    auto joined = [](const std::vector<std::string>& c) {
        std::string s;
        for (const auto& t : c) s += (s.empty() ? "" : " ") + t;
        return s;
    };
    CHECK(joined(chunks[0]) == "kuyenzeka yini kuthi");
    CHECK(joined(chunks[1]) == "umakuqhume condom kuvele");
    CHECK(joined(chunks[2]) == "kuthi khulelwe");
    CHECK(joined(chunks[3]) == "after day");
}

TEST_CASE("split errors") {
    const std::vector<std::string> none;
    CHECK_THROWS_AS(split_chunks(none, 4), Error);
    try {
        split_chunks(none, 4);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyTokens);
    }
    try {
        split_chunks(words(3), 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidConfig);
    }
}

TEST_CASE("split covers every token for all small sizes") {
    for (std::size_t t = 1; t <= 60; ++t) {
        for (int k = 1; k <= 8; ++k) {
            const auto tokens = words(t);
            const auto chunks = split_chunks(tokens, k);
            CHECK(chunks.size() == std::min<std::size_t>(k, t));
            std::vector<std::string> flat;
            for (const auto& c : chunks) flat.insert(flat.end(), c.begin(), c.end());
            CHECK(flat == tokens);
        }
    }
}

TEST_CASE("aggregate keeps first occurrences and drops und") {
    using V = std::vector<std::string>;
    CHECK(aggregate(V{"en", "en", "zu", "en"}).str() == "en,zu");
    CHECK(aggregate(V{"und", "und", "und", "und"}).str() == "und");
    CHECK(aggregate(V{"zu", "en", "zu", "en"}).str() == "zu,en");
    CHECK(aggregate(V{"zu", "en", "zu", "en"}) == LanguageTag::parse("en,zu"));
    CHECK(aggregate(V{"und", "xh"}).str() == "xh");
}

TEST_CASE("aggregate is permutation invariant as a set") {
    std::mt19937_64 rng(3);
    const std::vector<std::string> codes{"en", "zu", "xh", "und"};
    for (int i = 0; i < 300; ++i) {
        std::vector<std::string> labels;
        for (int j = 0; j < 4; ++j) labels.push_back(codes[rng() % codes.size()]);
        const auto tag = aggregate(labels);
        std::shuffle(labels.begin(), labels.end(), rng);
        CHECK(aggregate(labels) == tag);
    }
}

TEST_CASE("detect flags a half-and-half synthetic document") {
    const auto& f = two_languages();
    std::string text;
    for (int i = 0; i < 4; ++i) text += f.lex_a[static_cast<std::size_t>(i)] + " ";
    for (int i = 0; i < 4; ++i) text += f.lex_b[static_cast<std::size_t>(i)] + " ";
    const auto r = detect(Document{"d1", text, {}, {}}, f.profiles);
    CHECK(r.doc_id == "d1");
    CHECK(r.tag == LanguageTag::parse("xa,xb"));
    CHECK(r.tag.str() == "xa,xb");
    CHECK(r.code_switched);
    CHECK(r.chunks.size() == 4);
}

TEST_CASE("detect leaves a monolingual training sentence monolingual") {
    const auto& f = two_languages();
    const auto line = make_sentences(f.lex_a, 1, 10, 23).front();
    const auto r = detect(Document{"d2", line, {}, {}}, f.profiles);
    CHECK(r.tag.str() == "xa");
    CHECK_FALSE(r.code_switched);
}

TEST_CASE("detect on text that normalizes away") {
    const auto& f = two_languages();
    const auto r = detect(Document{"d3", "12345 !!!", {}, {}}, f.profiles);
    CHECK(r.tag.str() == "und");
    CHECK(r.chunks.empty());
    CHECK_FALSE(r.code_switched);
}

TEST_CASE("detect structural invariants and batch ordering") {
    const auto& f = two_languages();
    MixSpec spec{"xa", "xb", f.lex_a, f.lex_b, 300, 0.5, 9, 77};
    auto docs = generate(spec);
    docs.push_back(Document{"tiny", "ab", {}, {}});
    docs.push_back(Document{"empty", "", {}, {}});

    const auto serial = detect_batch(docs, f.profiles, {}, 1);
    const auto parallel = detect_batch(docs, f.profiles, {}, 4);
    REQUIRE(serial.size() == docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
        const auto& r = parallel[i];
        CHECK(r.doc_id == docs[i].id);
        CHECK(r.tag.str() == serial[i].tag.str());

        const auto tokens = normalize(docs[i].text).tokens();
        if (!tokens.empty()) CHECK(r.chunks.size() == std::min<std::size_t>(4, tokens.size()));
        std::vector<std::string> flat, reliable;
        for (const auto& c : r.chunks) {
            const auto ct = NormalizedText::assume_normalized(c.text).tokens();
            flat.insert(flat.end(), ct.begin(), ct.end());
            CHECK(c.reliable == (c.prediction.lang != "und"));
            if (c.reliable) reliable.push_back(c.prediction.lang);
        }
        CHECK(flat == tokens);
        CHECK(r.code_switched == (r.tag.size() >= 2));
        if (reliable.empty()) {
            CHECK(r.tag.is_undetermined());
        } else {
            CHECK(r.tag.str() == aggregate(reliable).str());
        }
    }
}

TEST_CASE("detect requires profiles") {
    ProfileSet empty;
    CHECK_THROWS_AS(detect(Document{"x", "hello there", {}, {}}, empty), Error);
}

}
