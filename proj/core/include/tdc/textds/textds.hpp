#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include <tdc/succinct/packed_int_array.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// Storage modes of TextDS arrays.
///  - plain:      machine-word arrays
///  - compressed: bit-packed at width ceil(lg n) as soon as they are built
///  - delayed:    built plain, packed once every requested structure that
///                depends on them has been built
enum class DSMode { plain, compressed, delayed };

/// Integer array that is either plain or bit-packed.
class IntArray {
public:
    IntArray() = default;
    explicit IntArray(std::vector<index_t> plain) : data_(std::move(plain)) {}
    explicit IntArray(PackedIntArray packed) : data_(std::move(packed)) {}

    std::size_t size() const {
        return std::visit([](const auto& d) { return d.size(); }, data_);
    }

    index_t operator[](std::size_t i) const {
        if(auto p = std::get_if<std::vector<index_t>>(&data_)) return (*p)[i];
        return static_cast<index_t>(std::get<PackedIntArray>(data_).get(i));
    }

    bool is_packed() const { return std::holds_alternative<PackedIntArray>(data_); }
    const PackedIntArray& packed() const { return std::get<PackedIntArray>(data_); }
    const std::vector<index_t>& plain() const { return std::get<std::vector<index_t>>(data_); }

    /// Repacks a plain array at the given width; no-op if already packed.
    void pack(unsigned width);

    std::vector<index_t> to_vector() const;
    std::size_t bytes() const;

private:
    std::variant<std::vector<index_t>, PackedIntArray> data_;
};

/// Lazily built bundle of SA, ISA, LCP and BWT over a sentinel-terminated text.
class TextDS {
public:
    enum Flags : unsigned { SA = 1, ISA = 2, LCP = 4, BWT = 8 };

    /// `text` must end with a unique 0x00 sentinel (see make_text).
    TextDS(ByteView text, DSMode mode = DSMode::delayed);

    std::size_t size() const { return text_.size(); }
    ByteView text() const { return text_; }
    std::uint8_t operator[](std::size_t i) const { return text_[i]; }
    DSMode mode() const { return mode_; }

    /// Builds the requested structures together with their dependencies
    /// (ISA, LCP and BWT all need SA).
    void require(unsigned flags);

    const IntArray& require_sa() { require(SA); return *sa_; }
    const IntArray& require_isa() { require(ISA); return *isa_; }
    const IntArray& require_lcp() { require(LCP); return *lcp_; }
    const Bytes& require_bwt() { require(BWT); return *bwt_; }

    bool has(Flags f) const;

    /// Bit width used for packed arrays: ceil(lg n), at least 1.
    unsigned packed_width() const;

private:
    void maybe_pack(std::optional<IntArray>& arr, bool dependents_pending);

    ByteView text_;
    DSMode mode_;
    std::optional<IntArray> sa_, isa_, lcp_;
    std::optional<Bytes> bwt_;
};

} // namespace tdc
