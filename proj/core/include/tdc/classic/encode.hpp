#pragma once

#include <memory>

#include <tdc/coders/coder.hpp>
#include <tdc/core/compressor.hpp>

namespace tdc {

/// Wraps a coder: VByte(n), the literal model of the input, then the input
/// as a single literal run. The empty input yields an empty body.
class EncodeCompressor final : public Compressor {
public:
    explicit EncodeCompressor(std::shared_ptr<Coder> coder) : coder_(std::move(coder)) {}
    Bytes compress(ByteView input) const override;
    Bytes decompress(ByteView input) const override;

private:
    std::shared_ptr<Coder> coder_;
};

} // namespace tdc
