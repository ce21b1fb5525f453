#include <tdc/coders/sle.hpp>

#include <algorithm>
#include <map>

#include <tdc/coders/vbyte.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

namespace {

constexpr std::uint32_t kTrigramLimit = std::uint32_t(1) << 24;

std::uint32_t trigram_key(ByteView run, std::size_t i) {
    return (std::uint32_t(run[i]) << 16) | (std::uint32_t(run[i + 1]) << 8) | run[i + 2];
}

} // namespace

SleModel::SleModel(std::span<const ByteView> runs) {
    std::map<std::uint32_t, std::uint64_t> counts;
    for(const auto run : runs) {
        for(std::size_t i = 0; i + 3 <= run.size(); ++i) ++counts[trigram_key(run, i)];
    }
    for(const auto& [key, count] : counts) {
        if(count >= kMinTrigramCount) trigrams_.push_back(key);
    }
    std::vector<std::uint64_t> freq(256 + trigrams_.size(), 0);
    for(const auto run : runs) {
        for(auto t : tokenize(run)) ++freq[t];
    }
    code_ = CanonicalCode::from_frequencies(freq);
}

std::int64_t SleModel::trigram_token(std::uint32_t key) const {
    auto it = std::lower_bound(trigrams_.begin(), trigrams_.end(), key);
    if(it == trigrams_.end() || *it != key) return -1;
    return 256 + (it - trigrams_.begin());
}

std::vector<std::uint32_t> SleModel::tokenize(ByteView run) const {
    std::vector<std::uint32_t> tokens;
    tokens.reserve(run.size());
    std::size_t i = 0;
    while(i < run.size()) {
        if(i + 3 <= run.size() && !trigrams_.empty()) {
            const auto t = trigram_token(trigram_key(run, i));
            if(t >= 0) {
                tokens.push_back(static_cast<std::uint32_t>(t));
                i += 3;
                continue;
            }
        }
        tokens.push_back(run[i++]);
    }
    return tokens;
}

void SleModel::write(BitWriter& out) const {
    vbyte_encode(out, trigrams_.size());
    for(auto key : trigrams_) out.write_bits(key, 24);
    code_.write(out);
}

SleModel SleModel::read(BitReader& in) {
    SleModel m;
    const std::uint64_t k = vbyte_decode(in);
    if(k > kTrigramLimit) throw DataError("sle model: too many 3-grams");
    m.trigrams_.reserve(k);
    for(std::uint64_t i = 0; i < k; ++i) {
        const auto key = static_cast<std::uint32_t>(in.read_bits(24));
        if(!m.trigrams_.empty() && key <= m.trigrams_.back()) {
            throw DataError("sle model: 3-grams not strictly increasing");
        }
        m.trigrams_.push_back(key);
    }
    m.code_ = CanonicalCode::read(in);
    if(m.code_.lengths().size() > 256 + m.trigrams_.size()) {
        throw DataError("sle model: token id out of range");
    }
    return m;
}

void SleModel::encode(BitWriter& out, ByteView run) const {
    for(auto t : tokenize(run)) code_.encode(out, t);
}

void SleModel::decode(BitReader& in, std::size_t len, Bytes& out) const {
    std::size_t produced = 0;
    while(produced < len) {
        const auto t = code_.decode(in);
        if(t < 256) {
            out.push_back(static_cast<std::uint8_t>(t));
            ++produced;
            continue;
        }
        if(produced + 3 > len) throw DataError("sle: 3-gram token crosses run boundary");
        const auto key = trigrams_[t - 256];
        out.push_back(static_cast<std::uint8_t>(key >> 16));
        out.push_back(static_cast<std::uint8_t>(key >> 8));
        out.push_back(static_cast<std::uint8_t>(key));
        produced += 3;
    }
}

} // namespace tdc
