#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tdc {

/// Plain bit vector with 0-based positions.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size, bool value = false);

    std::size_t size() const { return size_; }

    bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if(value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void push_back(bool value);

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// Rank and select support over an immutable BitVector.
///
/// Rank uses a two-level directory (512-bit superblocks with absolute counts,
/// 64-bit blocks with counts relative to their superblock). Select keeps the
/// position of every 512th one-bit and scans words from the sampled block.
/// The bit vector must outlive this structure and must not change.
class RankSelect {
public:
    RankSelect() = default;
    explicit RankSelect(const BitVector& bv);

    /// Number of one-bits among the first `i` bits, i.e. in bv[0, i).
    /// Equivalently the 1-based rank of bit i (counting bv[1..i]).
    /// Requires i <= size.
    std::size_t rank1(std::size_t i) const;

    std::size_t rank0(std::size_t i) const { return i - rank1(i); }

    /// 0-based position of the k-th one-bit, 1 <= k <= popcount.
    std::size_t select1(std::size_t k) const;

    std::size_t ones() const { return ones_; }
    std::size_t size() const { return bv_ ? bv_->size() : 0; }

private:
    static constexpr std::size_t kSuperBits = 512;
    static constexpr std::size_t kSelectSample = 512;

    const BitVector* bv_ = nullptr;
    std::vector<std::uint64_t> super_;
    std::vector<std::uint16_t> block_;
    std::vector<std::size_t> select_samples_;
    std::size_t ones_ = 0;
};

} // namespace tdc
