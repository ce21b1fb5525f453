#include <tdc/coders/vbyte.hpp>

#include <tdc/util/error.hpp>

namespace tdc {

void vbyte_encode(std::uint64_t v, Bytes& out) {
    while(v >= 0x80) {
        out.push_back(static_cast<std::uint8_t>((v & 0x7F) | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint64_t vbyte_decode(ByteView in, std::size_t& pos) {
    std::uint64_t v = 0;
    for(unsigned shift = 0;; shift += 7) {
        if(pos >= in.size()) throw DataError("vbyte: unterminated sequence");
        if(shift > 63) throw DataError("vbyte: value overflow");
        const std::uint8_t b = in[pos++];
        v |= std::uint64_t(b & 0x7F) << shift;
        if(!(b & 0x80)) return v;
    }
}

void vbyte_encode(BitWriter& out, std::uint64_t v) {
    while(v >= 0x80) {
        out.write_bits((v & 0x7F) | 0x80, 8);
        v >>= 7;
    }
    out.write_bits(v, 8);
}

std::uint64_t vbyte_decode(BitReader& in) {
    std::uint64_t v = 0;
    for(unsigned shift = 0;; shift += 7) {
        if(in.bits_left() < 8) throw DataError("vbyte: unterminated sequence");
        if(shift > 63) throw DataError("vbyte: value overflow");
        const auto b = in.read_bits(8);
        v |= (b & 0x7F) << shift;
        if(!(b & 0x80)) return v;
    }
}

} // namespace tdc
