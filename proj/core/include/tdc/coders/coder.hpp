#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include <tdc/succinct/bit_io.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// Codes literal byte runs with a model trained on all runs up front.
class LiteralEncoder {
public:
    virtual ~LiteralEncoder() = default;
    virtual void write_model(BitWriter& out) const = 0;
    virtual void encode(BitWriter& out, ByteView run) const = 0;
};

class LiteralDecoder {
public:
    virtual ~LiteralDecoder() = default;
    virtual void read_model(BitReader& in) = 0;
    /// Appends exactly `len` decoded bytes to `out`.
    virtual void decode(BitReader& in, std::size_t len, Bytes& out) const = 0;
};

/// A coder writes integers and literal runs into a bit stream.
///
/// Integers are coded relative to a universe (v < universe) known to both
/// sides; only the bit-compact layout uses it. Literal runs go through a
/// static model: the encoder sees every run before coding the first one and
/// serializes its model into the stream.
class Coder {
public:
    static constexpr const char* kType = "coder";

    virtual ~Coder() = default;

    virtual void encode_int(BitWriter& out, std::uint64_t v, std::uint64_t universe) const = 0;
    virtual std::uint64_t decode_int(BitReader& in, std::uint64_t universe) const = 0;

    virtual std::unique_ptr<LiteralEncoder> literal_encoder(std::span<const ByteView> runs) const = 0;
    virtual std::unique_ptr<LiteralDecoder> literal_decoder() const = 0;
};

} // namespace tdc
