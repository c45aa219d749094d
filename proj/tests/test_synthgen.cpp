#include <doctest.h>

#include <set>

#include "codemix/error.hpp"
#include "codemix/synthgen.hpp"
#include "codemix/text_norm.hpp"

using namespace codemix;

namespace {

MixSpec base_spec() {
    MixSpec s;
    s.lang_a = "xa";
    s.lang_b = "xb";
    s.source_a = make_lexicon(U"abcdef", 50, 2, 6, 1);
    s.source_b = make_lexicon(U"uvwxyz", 50, 2, 6, 2);
    s.n_docs = 500;
    s.tokens_per_doc = 8;
    s.seed = 9;
    return s;
}

// 'a' for tokens from pool a, 'b' for pool b.
std::string provenance(const Document& d, const MixSpec& s) {
    const std::set<std::string> a(s.source_a.begin(), s.source_a.end());
    const std::set<std::string> b(s.source_b.begin(), s.source_b.end());
    std::string out;
    for (const auto& t : NormalizedText::assume_normalized(d.text).tokens()) {
        if (a.count(t)) {
            out.push_back('a');
        } else {
            REQUIRE(b.count(t));
            out.push_back('b');
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("synthgen") {

TEST_CASE("mix rate extremes") {
    auto s = base_spec();
    s.mix_rate = 0.0;
    for (const auto& d : generate(s)) CHECK(d.gold_tag->size() == 1);
    s.mix_rate = 1.0;
    for (const auto& d : generate(s)) {
        CHECK(d.gold_tag->str() == "xa,xb");
        const auto p = provenance(d, s);
        CHECK(p.find('a') != std::string::npos);
        CHECK(p.find('b') != std::string::npos);
    }
}

TEST_CASE("tokens partition consistently with the gold tag") {
    auto s = base_spec();
    s.mix_rate = 0.5;
    for (const auto& d : generate(s)) {
        const auto p = provenance(d, s);
        CHECK(p.size() == s.tokens_per_doc);
        if (d.gold_tag->size() == 2) {
            // One switch point: a+ b+
            const auto first_b = p.find('b');
            REQUIRE(first_b != std::string::npos);
            CHECK(first_b > 0);
            CHECK(p.find('a', first_b) == std::string::npos);
        } else {
            const char only = d.gold_tag->str() == "xa" ? 'a' : 'b';
            CHECK(p == std::string(p.size(), only));
        }
    }
}

TEST_CASE("generation is deterministic") {
    const auto s = base_spec();
    const auto a = generate(s);
    const auto b = generate(s);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].text == b[i].text);
        CHECK(a[i].gold_tag->str() == b[i].gold_tag->str());
    }
}

TEST_CASE("empirical mix fraction tracks the rate") {
    auto s = base_spec();
    s.n_docs = 10000;
    s.mix_rate = 0.3;
    s.seed = 2024;
    std::size_t mixed = 0;
    for (const auto& d : generate(s)) mixed += d.gold_tag->size() == 2;
    const double fraction = static_cast<double>(mixed) / 10000.0;
    CHECK(fraction == doctest::Approx(0.3).epsilon(0.02 / 0.3));
    CHECK(mixed == 2956);
}

TEST_CASE("invalid specs") {
    auto code = [](MixSpec s) {
        try {
            generate(s);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidConfig;
    };
    auto s = base_spec();
    s.source_b.push_back(s.source_a.front());
    CHECK(code(s) == ErrorCode::InvalidSpec);
    s = base_spec();
    s.tokens_per_doc = 3;
    CHECK(code(s) == ErrorCode::InvalidSpec);
    s = base_spec();
    s.source_a.clear();
    CHECK(code(s) == ErrorCode::InvalidSpec);
    s = base_spec();
    s.mix_rate = 1.5;
    CHECK(code(s) == ErrorCode::InvalidSpec);
    s = base_spec();
    s.lang_b = "xa";
    CHECK(code(s) == ErrorCode::InvalidSpec);
}

TEST_CASE("lexicons are distinct words over the alphabet") {
    const auto lex = make_lexicon(U"ŋɛɔ", 20, 2, 4, 3);
    CHECK(lex.size() == 20);
    CHECK(std::set<std::string>(lex.begin(), lex.end()).size() == 20);
    for (const auto& w : lex) CHECK(normalize(w).str() == w);
    CHECK_THROWS_AS(make_lexicon(U"ab", 100, 1, 2, 1), Error);
}

}
