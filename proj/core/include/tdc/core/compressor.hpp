#pragma once

#include <memory>
#include <vector>

#include <tdc/util/bytes.hpp>

namespace tdc {

/// A compressor turns a byte sequence into a byte sequence and back.
/// Instances are used by one job at a time.
class Compressor {
public:
    static constexpr const char* kType = "compressor";

    virtual ~Compressor() = default;

    virtual Bytes compress(ByteView input) const = 0;
    virtual Bytes decompress(ByteView input) const = 0;
};

/// Chain `a:b:c`: each stage consumes the complete output of the previous
/// one; decompression runs the stages in reverse.
class Pipeline final : public Compressor {
public:
    explicit Pipeline(std::vector<std::shared_ptr<Compressor>> stages);

    Bytes compress(ByteView input) const override;
    Bytes decompress(ByteView input) const override;

    std::size_t size() const { return stages_.size(); }

private:
    std::vector<std::shared_ptr<Compressor>> stages_;
};

} // namespace tdc
