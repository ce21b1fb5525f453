#pragma once

#include <cstdint>

#include <tdc/succinct/bit_io.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

// VByte: 7-bit groups, least significant group first; the MSB of a byte is
// set iff another byte follows.

void vbyte_encode(std::uint64_t v, Bytes& out);

/// Decodes at `pos` and advances it. Throws DataError on truncation or overflow.
std::uint64_t vbyte_decode(ByteView in, std::size_t& pos);

/// Same byte layout written through a bit stream (8 bits per group).
void vbyte_encode(BitWriter& out, std::uint64_t v);
std::uint64_t vbyte_decode(BitReader& in);

} // namespace tdc
