#pragma once

#include <bit>
#include <cstdint>

namespace tdc {

/// Number of bits needed to store any value in [0, x]; at least 1.
constexpr unsigned bits_for(std::uint64_t x) {
    return x == 0 ? 1u : static_cast<unsigned>(std::bit_width(x));
}

/// ceil(lg n) with the convention ceil_log2(0) = ceil_log2(1) = 0.
constexpr unsigned ceil_log2(std::uint64_t n) {
    return n <= 1 ? 0u : static_cast<unsigned>(std::bit_width(n - 1));
}

/// floor(lg v) for v >= 1.
constexpr unsigned floor_log2(std::uint64_t v) {
    return static_cast<unsigned>(std::bit_width(v)) - 1u;
}

} // namespace tdc
