#include <tdc/classic/lz78.hpp>

#include <unordered_map>

#include <tdc/coders/vbyte.hpp>
#include <tdc/core/stats.hpp>
#include <tdc/textds/text.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

std::vector<Lz78Factor> lz78_factorize(ByteView text) {
    // trie edges keyed by (node id, byte); node 0 is the root
    std::unordered_map<std::uint64_t, index_t> edges;
    std::vector<Lz78Factor> factors;
    std::size_t i = 0;
    while(i < text.size()) {
        index_t node = 0;
        while(i + 1 < text.size()) {
            auto it = edges.find((std::uint64_t(node) << 8) | text[i]);
            if(it == edges.end()) break;
            node = it->second;
            ++i;
        }
        const auto id = static_cast<index_t>(factors.size() + 1);
        edges.emplace((std::uint64_t(node) << 8) | text[i], id);
        factors.push_back({node, text[i]});
        ++i;
    }
    return factors;
}

Bytes lz78_expand(const std::vector<Lz78Factor>& factors) {
    // factor x starts at offset[x] and has length len[x] in the output
    std::vector<std::size_t> offset(factors.size() + 1, 0), len(factors.size() + 1, 0);
    Bytes out;
    for(std::size_t x = 1; x <= factors.size(); ++x) {
        const auto& f = factors[x - 1];
        if(f.ref >= x) throw DataError("LZ78: reference to a later factor");
        offset[x] = out.size();
        len[x] = len[f.ref] + 1;
        for(std::size_t k = 0; k < len[f.ref]; ++k) out.push_back(out[offset[f.ref] + k]);
        out.push_back(f.ext);
    }
    return out;
}

Bytes Lz78Compressor::compress(ByteView input) const {
    const Bytes text = make_text(input);
    std::vector<Lz78Factor> factors;
    {
        StatPhase phase("Factorize");
        factors = lz78_factorize(text);
        phase.log_stat("factor_count", factors.size());
    }
    StatPhase phase("Encode");
    std::vector<ByteView> runs;
    runs.reserve(factors.size());
    for(const auto& f : factors) runs.emplace_back(&f.ext, 1);
    auto lit = coder_->literal_encoder(runs);
    BitWriter out;
    vbyte_encode(out, factors.size());
    lit->write_model(out);
    for(std::size_t x = 1; x <= factors.size(); ++x) {
        coder_->encode_int(out, factors[x - 1].ref, x);
        lit->encode(out, runs[x - 1]);
    }
    return std::move(out).finish();
}

Bytes Lz78Compressor::decompress(ByteView input) const {
    BitReader in(input);
    const auto z = vbyte_decode(in);
    if(z > input.size() * 8) throw DataError("LZ78: factor count exceeds stream size");
    auto lit = coder_->literal_decoder();
    lit->read_model(in);
    std::vector<Lz78Factor> factors;
    factors.reserve(z);
    Bytes ext;
    for(std::uint64_t x = 1; x <= z; ++x) {
        const auto ref = static_cast<index_t>(coder_->decode_int(in, x));
        ext.clear();
        lit->decode(in, 1, ext);
        factors.push_back({ref, ext[0]});
    }
    return strip_sentinel(lz78_expand(factors));
}

} // namespace tdc
