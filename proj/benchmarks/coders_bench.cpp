#include <random>

#include <benchmark/benchmark.h>

#include <tdc/coders/coders.hpp>
#include <tdc/coders/elias.hpp>
#include <tdc/coders/vbyte.hpp>
#include <tdc/gen/generators.hpp>

using namespace tdc;

namespace {

std::vector<std::uint64_t> values(std::size_t n) {
    std::mt19937_64 rng(1);
    std::vector<std::uint64_t> v(n);
    for(auto& x : v) x = 1 + (rng() & ((std::uint64_t(1) << (rng() % 24)) - 1));
    return v;
}

void BM_Gamma(benchmark::State& state) {
    const auto v = values(1 << 16);
    for(auto _ : state) {
        BitWriter w;
        for(auto x : v) gamma_encode(w, x);
        const Bytes b = std::move(w).finish();
        BitReader r(b);
        std::uint64_t sum = 0;
        for(std::size_t i = 0; i < v.size(); ++i) sum += gamma_decode(r);
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_Gamma);

void BM_Delta(benchmark::State& state) {
    const auto v = values(1 << 16);
    for(auto _ : state) {
        BitWriter w;
        for(auto x : v) delta_encode(w, x);
        const Bytes b = std::move(w).finish();
        BitReader r(b);
        std::uint64_t sum = 0;
        for(std::size_t i = 0; i < v.size(); ++i) sum += delta_decode(r);
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_Delta);

void BM_VByte(benchmark::State& state) {
    const auto v = values(1 << 16);
    for(auto _ : state) {
        Bytes b;
        for(auto x : v) vbyte_encode(x, b);
        std::size_t pos = 0;
        std::uint64_t sum = 0;
        for(std::size_t i = 0; i < v.size(); ++i) sum += vbyte_decode(b, pos);
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_VByte);

void BM_Literals(benchmark::State& state) {
    const std::shared_ptr<Coder> coders[] = {make_bit_coder(), make_huffman_coder(), make_sle_coder()};
    const auto& coder = coders[state.range(0)];
    const Bytes text = repetitive_text(1 << 18, 3);
    const ByteView runs[] = {text};
    for(auto _ : state) {
        BitWriter w;
        auto enc = coder->literal_encoder(runs);
        enc->write_model(w);
        enc->encode(w, text);
        const Bytes b = std::move(w).finish();
        BitReader r(b);
        auto dec = coder->literal_decoder();
        dec->read_model(r);
        Bytes out;
        dec->decode(r, text.size(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Literals)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

} // namespace
