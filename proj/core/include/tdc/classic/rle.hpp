#pragma once

#include <tdc/core/compressor.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// Every maximal run c^k with k >= 2 becomes c c VByte(k - 2); other bytes
/// are copied.
Bytes rle_encode(ByteView input);
Bytes rle_decode(ByteView input);

class RleCompressor final : public Compressor {
public:
    Bytes compress(ByteView input) const override { return rle_encode(input); }
    Bytes decompress(ByteView input) const override { return rle_decode(input); }
};

} // namespace tdc
