#include <benchmark/benchmark.h>

#include <tdc/gen/generators.hpp>
#include <tdc/lz78u/suffix_tree.hpp>
#include <tdc/textds/text.hpp>
#include <tdc/textds/textds.hpp>

using namespace tdc;

namespace {

void BM_SuffixArray(benchmark::State& state) {
    const Bytes text = make_text(random_text(state.range(0), 1, 4));
    for(auto _ : state) {
        TextDS ds(text, DSMode::plain);
        benchmark::DoNotOptimize(ds.require_sa()[0]);
    }
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_SuffixArray)->Range(1 << 12, 1 << 20)->Unit(benchmark::kMillisecond);

void BM_LcpAndIsa(benchmark::State& state) {
    const Bytes text = make_text(repetitive_text(state.range(0), 1));
    for(auto _ : state) {
        TextDS ds(text, static_cast<DSMode>(state.range(1)));
        ds.require(TextDS::LCP | TextDS::ISA);
        benchmark::DoNotOptimize(ds.require_lcp()[0]);
    }
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_LcpAndIsa)->ArgsProduct({{1 << 16, 1 << 20}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

void BM_SuffixTree(benchmark::State& state) {
    const Bytes text = make_text(repetitive_text(state.range(0), 2));
    for(auto _ : state) {
        TextDS ds(text);
        SuffixTree st(ds);
        benchmark::DoNotOptimize(st.size());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_SuffixTree)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
