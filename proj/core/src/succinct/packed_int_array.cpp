#include <tdc/succinct/packed_int_array.hpp>

#include <stdexcept>

namespace tdc {

PackedIntArray::PackedIntArray(std::size_t size, unsigned width)
    : words_((size * width + 63) / 64, 0), size_(size), width_(width) {
    if(width == 0 || width > 64) throw std::invalid_argument("PackedIntArray: width must be in [1, 64]");
    mask_ = width == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << width) - 1;
}

std::uint64_t PackedIntArray::get(std::size_t i) const {
    const std::size_t bit = i * width_;
    const std::size_t w = bit >> 6;
    const unsigned off = bit & 63;
    std::uint64_t v = words_[w] >> off;
    if(off + width_ > 64) {
        v |= words_[w + 1] << (64 - off);
    }
    return v & mask_;
}

void PackedIntArray::set(std::size_t i, std::uint64_t value) {
    value &= mask_;
    const std::size_t bit = i * width_;
    const std::size_t w = bit >> 6;
    const unsigned off = bit & 63;
    words_[w] = (words_[w] & ~(mask_ << off)) | (value << off);
    if(off + width_ > 64) {
        const unsigned spill = off + width_ - 64;
        const std::uint64_t hi_mask = (std::uint64_t(1) << spill) - 1;
        words_[w + 1] = (words_[w + 1] & ~hi_mask) | (value >> (64 - off));
    }
}

} // namespace tdc
