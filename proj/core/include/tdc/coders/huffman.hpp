#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <tdc/succinct/bit_io.hpp>

namespace tdc {

/// Canonical prefix code over integer symbols.
///
/// Codes of equal length are assigned in ascending symbol order. The
/// serialized form is VByte(#symbols) followed by (VByte symbol, VByte
/// length) pairs in ascending symbol order; codes are rebuilt from lengths.
/// A single coded symbol gets a 1-bit code.
class CanonicalCode {
public:
    CanonicalCode() = default;

    /// Huffman code lengths for the symbols with nonzero frequency.
    static CanonicalCode from_frequencies(std::span<const std::uint64_t> freq);

    /// `lengths[s]` = code length of symbol s, 0 if not coded.
    static CanonicalCode from_lengths(std::vector<std::uint8_t> lengths);

    static CanonicalCode read(BitReader& in);
    void write(BitWriter& out) const;

    void encode(BitWriter& out, std::uint32_t symbol) const;
    std::uint32_t decode(BitReader& in) const;

    std::size_t num_symbols() const { return sorted_.size(); }
    unsigned length(std::uint32_t symbol) const {
        return symbol < lengths_.size() ? lengths_[symbol] : 0;
    }
    std::uint64_t code(std::uint32_t symbol) const { return codes_[symbol]; }
    const std::vector<std::uint8_t>& lengths() const { return lengths_; }

    /// Total encoded bits of a message with the given symbol frequencies.
    std::uint64_t cost(std::span<const std::uint64_t> freq) const;

    /// True when only one symbol is coded (Kraft sum 1/2).
    bool single_symbol() const { return sorted_.size() == 1; }

private:
    void assign_codes();

    std::vector<std::uint8_t> lengths_;
    std::vector<std::uint64_t> codes_;
    std::vector<std::uint32_t> sorted_;       // symbols ordered by (length, symbol)
    std::vector<std::uint64_t> first_code_;   // per length
    std::vector<std::uint32_t> first_index_;  // per length, index into sorted_
    std::vector<std::uint32_t> count_;        // per length
    unsigned max_length_ = 0;
};

} // namespace tdc
