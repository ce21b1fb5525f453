#pragma once

#include <cstdint>

#include <tdc/util/bytes.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

/// Bit-granular writer. Bits are emitted MSB-first within each byte; the
/// final partial byte is zero-padded.
class BitWriter {
public:
    void write_bit(bool bit) {
        cur_ = static_cast<std::uint8_t>((cur_ << 1) | (bit ? 1u : 0u));
        if(++fill_ == 8) {
            buf_.push_back(cur_);
            cur_ = 0;
            fill_ = 0;
        }
        ++bits_;
    }

    /// Writes the `width` low bits of `value`, most significant first.
    void write_bits(std::uint64_t value, unsigned width) {
        for(unsigned i = width; i-- > 0;) {
            write_bit((value >> i) & 1u);
        }
    }

    std::uint64_t bit_count() const { return bits_; }

    Bytes finish() && {
        if(fill_ > 0) {
            buf_.push_back(static_cast<std::uint8_t>(cur_ << (8 - fill_)));
            cur_ = 0;
            fill_ = 0;
        }
        return std::move(buf_);
    }

private:
    Bytes buf_;
    std::uint8_t cur_ = 0;
    unsigned fill_ = 0;
    std::uint64_t bits_ = 0;
};

/// Reader counterpart of BitWriter.
class BitReader {
public:
    explicit BitReader(ByteView data) : data_(data) {}

    bool read_bit() {
        if(pos_ >= data_.size() * 8) {
            throw DataError("bit stream: read past end");
        }
        const bool bit = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return bit;
    }

    std::uint64_t read_bits(unsigned width) {
        std::uint64_t v = 0;
        for(unsigned i = 0; i < width; ++i) {
            v = (v << 1) | (read_bit() ? 1u : 0u);
        }
        return v;
    }

    std::uint64_t position() const { return pos_; }
    std::uint64_t bits_left() const { return data_.size() * 8 - pos_; }

private:
    ByteView data_;
    std::uint64_t pos_ = 0;
};

} // namespace tdc
