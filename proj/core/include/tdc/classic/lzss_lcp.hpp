#pragma once

#include <memory>
#include <vector>

#include <tdc/classic/lzss.hpp>
#include <tdc/coders/coder.hpp>
#include <tdc/core/compressor.hpp>
#include <tdc/textds/textds.hpp>

namespace tdc {

/// Greedy LZ77 with minimum reference length `threshold`: at each position
/// the longest previous occurrence (self-overlap allowed, smallest source on
/// ties) is found through the previous/next smaller SA values. Shorter
/// matches extend the current literal run.
std::vector<Lz77Factor> lzss_lcp_factorize(TextDS& ds, index_t threshold);

/// Stream: VByte(n) with n counting the sentinel, literal model, then per
/// factor a flag bit: 0 = literal run (gamma(length), bytes), 1 = reference
/// (src with universe pos, len - 1 with universe n - pos via the coder).
Bytes encode_lz77(const std::vector<Lz77Factor>& factors, ByteView text, const Coder& coder);
Bytes decode_lz77(ByteView body, const Coder& coder);

class LzssLcpCompressor final : public Compressor {
public:
    LzssLcpCompressor(index_t threshold, std::shared_ptr<Coder> coder)
        : threshold_(threshold), coder_(std::move(coder)) {}
    Bytes compress(ByteView input) const override;
    Bytes decompress(ByteView input) const override;

private:
    index_t threshold_;
    std::shared_ptr<Coder> coder_;
};

} // namespace tdc
