#include <tdc/succinct/bit_vector.hpp>

#include <bit>
#include <stdexcept>

namespace tdc {

BitVector::BitVector(std::size_t size, bool value)
    : words_((size + 63) / 64, value ? ~std::uint64_t(0) : 0), size_(size) {
    if(value && (size & 63)) {
        words_.back() &= (std::uint64_t(1) << (size & 63)) - 1;
    }
}

void BitVector::push_back(bool value) {
    if((size_ & 63) == 0) words_.push_back(0);
    ++size_;
    set(size_ - 1, value);
}

RankSelect::RankSelect(const BitVector& bv) : bv_(&bv) {
    const auto& words = bv.words();
    constexpr std::size_t words_per_super = kSuperBits / 64;
    super_.reserve(words.size() / words_per_super + 2);
    block_.reserve(words.size() + 1);

    std::uint64_t total = 0;
    std::uint64_t in_super = 0;
    for(std::size_t w = 0; w < words.size(); ++w) {
        if(w % words_per_super == 0) {
            super_.push_back(total);
            in_super = 0;
        }
        block_.push_back(static_cast<std::uint16_t>(in_super));
        const auto c = static_cast<std::uint64_t>(std::popcount(words[w]));
        // sample the position of every kSelectSample-th one-bit
        std::uint64_t word = words[w];
        std::uint64_t seen = total;
        while(word) {
            ++seen;
            if((seen - 1) % kSelectSample == 0) {
                select_samples_.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            }
            word &= word - 1;
        }
        total += c;
        in_super += c;
    }
    super_.push_back(total);
    ones_ = total;
}

std::size_t RankSelect::rank1(std::size_t i) const {
    if(i > size()) throw std::out_of_range("rank1: index out of range");
    if(i == size() ) return ones_;
    const std::size_t w = i >> 6;
    std::size_t r = super_[w / (kSuperBits / 64)] + block_[w];
    if(i & 63) {
        r += std::popcount(bv_->words()[w] & ((std::uint64_t(1) << (i & 63)) - 1));
    }
    return r;
}

std::size_t RankSelect::select1(std::size_t k) const {
    if(k == 0 || k > ones_) throw std::out_of_range("select1: rank out of range");
    const auto& words = bv_->words();
    const std::size_t sample = select_samples_[(k - 1) / kSelectSample];
    std::size_t w = sample >> 6;
    // ones strictly before word w
    std::size_t before = super_[w / (kSuperBits / 64)] + block_[w];
    for(;; ++w) {
        const auto c = static_cast<std::size_t>(std::popcount(words[w]));
        if(before + c >= k) break;
        before += c;
    }
    std::uint64_t word = words[w];
    for(std::size_t j = before + 1; j < k; ++j) word &= word - 1;
    return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
}

} // namespace tdc
