#pragma once

#include <memory>
#include <vector>

#include <tdc/coders/coder.hpp>
#include <tdc/core/compressor.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// Classic LZW codewords; the dictionary starts with all 256 bytes and
/// grows by one entry per emitted codeword after the first.
std::vector<std::uint32_t> lzw_factorize(ByteView input);
Bytes lzw_expand(const std::vector<std::uint32_t>& codes);

/// Stream: VByte(#codes), then codeword k (0-based) through the coder with
/// universe 256 + k.
class LzwCompressor final : public Compressor {
public:
    explicit LzwCompressor(std::shared_ptr<Coder> coder) : coder_(std::move(coder)) {}
    Bytes compress(ByteView input) const override;
    Bytes decompress(ByteView input) const override;

private:
    std::shared_ptr<Coder> coder_;
};

} // namespace tdc
