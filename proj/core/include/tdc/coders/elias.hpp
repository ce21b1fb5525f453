#pragma once

#include <cstdint>

#include <tdc/succinct/bit_io.hpp>

namespace tdc {

/// Elias-gamma: floor(lg v) zero bits, then v in binary. Requires v >= 1.
void gamma_encode(BitWriter& out, std::uint64_t v);
std::uint64_t gamma_decode(BitReader& in);

/// Elias-delta: gamma(1 + floor(lg v)), then the floor(lg v) low bits of v.
void delta_encode(BitWriter& out, std::uint64_t v);
std::uint64_t delta_decode(BitReader& in);

/// Fixed-width binary for v < universe: ceil(lg universe) bits.
void bit_compact_encode(BitWriter& out, std::uint64_t v, std::uint64_t universe);
std::uint64_t bit_compact_decode(BitReader& in, std::uint64_t universe);

} // namespace tdc
