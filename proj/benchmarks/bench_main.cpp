#include <benchmark/benchmark.h>

#include "codemix/chi_square.hpp"
#include "codemix/detector.hpp"
#include "codemix/identify.hpp"
#include "codemix/synthgen.hpp"
#include "codemix/text_norm.hpp"

using namespace codemix;

namespace {

const std::string kSample =
    "Ngicela ukwazi ukuthi ngingayithola kanjani i-clinic card yami? Thank you 🙏 so much!!";

struct Fixture {
    std::vector<std::string> lex_a = make_lexicon(U"abcdefghijklm", 300, 2, 8, 1);
    std::vector<std::string> lex_b = make_lexicon(U"nopqrstuvwxyz", 300, 2, 8, 2);
    ProfileSet profiles{{train(make_sentences(lex_a, 300, 10, 3), "xa"),
                         train(make_sentences(lex_b, 300, 10, 4), "xb")}};
    std::vector<Document> docs = generate(MixSpec{"xa", "xb", lex_a, lex_b, 2000, 0.5, 12, 5});
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

void BM_Normalize(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(normalize(kSample));
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * kSample.size()));
}
BENCHMARK(BM_Normalize);

void BM_Identify(benchmark::State& state) {
    const auto& f = fixture();
    const auto text = normalize(f.docs[0].text);
    for (auto _ : state) benchmark::DoNotOptimize(identify(text, f.profiles));
}
BENCHMARK(BM_Identify);

void BM_Detect(benchmark::State& state) {
    const auto& f = fixture();
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect(f.docs[i], f.profiles, DetectConfig{}));
        i = (i + 1) % f.docs.size();
    }
}
BENCHMARK(BM_Detect);

void BM_DetectBatch(benchmark::State& state) {
    const auto& f = fixture();
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(detect_batch(f.docs, f.profiles, DetectConfig{}, threads));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * f.docs.size()));
}
BENCHMARK(BM_DetectBatch)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Chi2Sf(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi2_sf(x, 3));
        x = x > 100.0 ? 0.0 : x + 0.37;
    }
}
BENCHMARK(BM_Chi2Sf);

}  // namespace

BENCHMARK_MAIN();
