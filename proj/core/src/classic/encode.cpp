#include <tdc/classic/encode.hpp>

#include <tdc/coders/vbyte.hpp>
#include <tdc/core/stats.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

Bytes EncodeCompressor::compress(ByteView input) const {
    if(input.empty()) return {};
    StatPhase phase("Encode");
    const ByteView runs[] = {input};
    auto lit = coder_->literal_encoder(runs);
    BitWriter out;
    vbyte_encode(out, input.size());
    lit->write_model(out);
    lit->encode(out, input);
    return std::move(out).finish();
}

Bytes EncodeCompressor::decompress(ByteView input) const {
    if(input.empty()) return {};
    StatPhase phase("Decode");
    BitReader in(input);
    const auto n = vbyte_decode(in);
    // every byte costs at least one bit, 3-gram tokens at most 3 bytes per bit
    if(n > input.size() * 24) throw DataError("encode: length exceeds stream size");
    auto lit = coder_->literal_decoder();
    lit->read_model(in);
    Bytes out;
    out.reserve(n);
    lit->decode(in, n, out);
    return out;
}

} // namespace tdc
