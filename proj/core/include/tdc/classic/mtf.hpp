#pragma once

#include <tdc/core/compressor.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// Move-to-front over a table initialized to the identity on 0..255.
Bytes mtf_encode(ByteView input);
Bytes mtf_decode(ByteView input);

class MtfCompressor final : public Compressor {
public:
    Bytes compress(ByteView input) const override { return mtf_encode(input); }
    Bytes decompress(ByteView input) const override { return mtf_decode(input); }
};

} // namespace tdc
