#pragma once

#include <memory>
#include <vector>

#include <tdc/coders/coder.hpp>
#include <tdc/core/compressor.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// LZ78 factor: F_x = F_ref + ext, with ref = 0 denoting the empty factor.
struct Lz78Factor {
    index_t ref = 0;
    std::uint8_t ext = 0;
    bool operator==(const Lz78Factor&) const = default;
};

/// Greedy LZ78 factorization of `text` (sentinel-terminated).
std::vector<Lz78Factor> lz78_factorize(ByteView text);

/// Concatenation of the factors.
Bytes lz78_expand(const std::vector<Lz78Factor>& factors);

/// Stream: VByte(z), literal model of the ext bytes, then per factor x
/// (1-based) the ref through the coder with universe x and the ext byte.
class Lz78Compressor final : public Compressor {
public:
    explicit Lz78Compressor(std::shared_ptr<Coder> coder) : coder_(std::move(coder)) {}
    Bytes compress(ByteView input) const override;
    Bytes decompress(ByteView input) const override;

private:
    std::shared_ptr<Coder> coder_;
};

} // namespace tdc
