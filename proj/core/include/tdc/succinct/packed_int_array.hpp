#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tdc {

/// Fixed-width bit-packed integer array ("bit-compact representation").
class PackedIntArray {
public:
    PackedIntArray() = default;
    PackedIntArray(std::size_t size, unsigned width);

    std::size_t size() const { return size_; }
    unsigned width() const { return width_; }

    std::uint64_t get(std::size_t i) const;
    void set(std::size_t i, std::uint64_t value);

    std::uint64_t operator[](std::size_t i) const { return get(i); }

    /// Payload words; bits beyond size * width are zero.
    const std::vector<std::uint64_t>& payload() const { return words_; }

    std::size_t bytes() const { return words_.size() * sizeof(std::uint64_t); }

    bool operator==(const PackedIntArray&) const = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
    unsigned width_ = 1;
    std::uint64_t mask_ = 1;
};

} // namespace tdc
