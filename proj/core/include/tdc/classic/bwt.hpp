#pragma once

#include <tdc/core/compressor.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// BWT of `input` followed by the 0x00 sentinel (n + 1 output bytes).
Bytes bwt_forward(ByteView input);

/// Inverts bwt_forward via LF-mapping. Throws DataError unless `bwt`
/// contains exactly one 0x00 byte.
Bytes bwt_inverse(ByteView bwt);

class BwtCompressor final : public Compressor {
public:
    Bytes compress(ByteView input) const override { return bwt_forward(input); }
    Bytes decompress(ByteView input) const override { return bwt_inverse(input); }
};

} // namespace tdc
