#include <tdc/lcpcomp/lcpcomp.hpp>

#include <limits>

#include <tdc/coders/elias.hpp>
#include <tdc/coders/vbyte.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

Bytes lcpcomp_encode(ByteView text, const std::vector<Lz77Factor>& refs, index_t threshold, const Coder& coder) {
    const std::size_t n = text.size();
    const auto factors = with_literal_runs(n, refs);
    std::vector<ByteView> runs;
    for(const auto& f : factors) {
        if(f.literal) runs.push_back(text.subspan(f.pos, f.len));
    }
    auto lit = coder.literal_encoder(runs);
    BitWriter out;
    vbyte_encode(out, n);
    vbyte_encode(out, threshold);
    lit->write_model(out);
    std::size_t pos = 0;
    for(const auto& f : factors) {
        if(f.pos != pos) throw std::invalid_argument("lcpcomp: overlapping or unsorted references");
        if(f.literal) {
            out.write_bit(false);
            gamma_encode(out, f.len);
            lit->encode(out, text.subspan(f.pos, f.len));
        } else {
            if(f.len < threshold) throw std::invalid_argument("lcpcomp: reference shorter than threshold");
            out.write_bit(true);
            coder.encode_int(out, f.src, n);
            gamma_encode(out, f.len - threshold + 1);
        }
        pos += f.len;
    }
    return std::move(out).finish();
}

LcpcompStream lcpcomp_parse(ByteView body, const Coder& coder) {
    BitReader in(body);
    LcpcompStream s;
    const auto n = vbyte_decode(in);
    if(n > (std::uint64_t(1) << 32) - 2) throw DataError("lcpcomp stream: text too long");
    const auto threshold = vbyte_decode(in);
    if(threshold == 0 || threshold > std::numeric_limits<index_t>::max()) throw DataError("lcpcomp stream: invalid threshold");
    s.n = n;
    s.threshold = static_cast<index_t>(threshold);
    auto lit = coder.literal_decoder();
    lit->read_model(in);
    std::size_t pos = 0;
    while(pos < n) {
        if(!in.read_bit()) {
            const auto len = gamma_decode(in);
            if(len > n - pos) throw DataError("lcpcomp stream: literal run exceeds text");
            lit->decode(in, len, s.literals);
            s.factors.push_back({static_cast<index_t>(pos), static_cast<index_t>(len), 0, true});
            pos += len;
        } else {
            const auto src = coder.decode_int(in, n);
            const auto g = gamma_decode(in);
            const auto len = g + threshold - 1;
            if(len > n - pos || len > n - src) throw DataError("lcpcomp stream: reference exceeds text");
            s.factors.push_back({static_cast<index_t>(pos), static_cast<index_t>(len), static_cast<index_t>(src), false});
            pos += len;
        }
    }
    return s;
}

} // namespace tdc
