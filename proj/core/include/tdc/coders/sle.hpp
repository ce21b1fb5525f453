#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <tdc/coders/huffman.hpp>
#include <tdc/succinct/bit_io.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// Static low-entropy model: Huffman over the 256 byte literals plus the
/// 3-grams that occur at least `kMinTrigramCount` times inside the literal
/// runs it was trained on.
///
/// Token ids: 0..255 are bytes, 256 + k is the k-th selected 3-gram (in
/// ascending byte order). A run is tokenized greedily from the left,
/// preferring a 3-gram token over a byte; tokens never cross run boundaries.
class SleModel {
public:
    static constexpr std::uint32_t kMinTrigramCount = 8;

    SleModel() = default;
    explicit SleModel(std::span<const ByteView> runs);

    static SleModel read(BitReader& in);
    void write(BitWriter& out) const;

    void encode(BitWriter& out, ByteView run) const;
    /// Decodes tokens until `len` bytes were appended to `out`.
    void decode(BitReader& in, std::size_t len, Bytes& out) const;

    std::vector<std::uint32_t> tokenize(ByteView run) const;

    const std::vector<std::uint32_t>& trigrams() const { return trigrams_; }
    const CanonicalCode& code() const { return code_; }

private:
    std::int64_t trigram_token(std::uint32_t key) const;

    std::vector<std::uint32_t> trigrams_; // sorted 24-bit keys
    CanonicalCode code_;
};

} // namespace tdc
