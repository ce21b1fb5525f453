#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tdc {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Text positions and suffix array entries. Inputs are limited to 2^32 - 2 bytes.
using index_t = std::uint32_t;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline ByteView as_view(std::string_view s) {
    return ByteView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

inline std::string to_string(ByteView b) {
    return std::string(b.begin(), b.end());
}

} // namespace tdc
