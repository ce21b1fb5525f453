#include <tdc/coders/elias.hpp>

#include <stdexcept>

#include <tdc/util/bits.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

void gamma_encode(BitWriter& out, std::uint64_t v) {
    if(v == 0) throw std::invalid_argument("gamma code requires v >= 1");
    const unsigned n = floor_log2(v);
    out.write_bits(0, n);
    out.write_bits(v, n + 1);
}

std::uint64_t gamma_decode(BitReader& in) {
    unsigned n = 0;
    while(!in.read_bit()) {
        if(++n > 63) throw DataError("gamma code: malformed prefix");
    }
    return (std::uint64_t(1) << n) | in.read_bits(n);
}

void delta_encode(BitWriter& out, std::uint64_t v) {
    if(v == 0) throw std::invalid_argument("delta code requires v >= 1");
    const unsigned n = floor_log2(v);
    gamma_encode(out, n + 1);
    out.write_bits(v, n);
}

std::uint64_t delta_decode(BitReader& in) {
    const std::uint64_t len = gamma_decode(in);
    if(len > 64) throw DataError("delta code: malformed prefix");
    const auto n = static_cast<unsigned>(len - 1);
    return (std::uint64_t(1) << n) | in.read_bits(n);
}

void bit_compact_encode(BitWriter& out, std::uint64_t v, std::uint64_t universe) {
    if(v >= universe) throw std::invalid_argument("bit-compact: value outside universe");
    out.write_bits(v, ceil_log2(universe));
}

std::uint64_t bit_compact_decode(BitReader& in, std::uint64_t universe) {
    const std::uint64_t v = in.read_bits(ceil_log2(universe));
    if(v >= universe) throw DataError("bit-compact: value outside universe");
    return v;
}

} // namespace tdc
