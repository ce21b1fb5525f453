#include <tdc/coders/huffman.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <tdc/coders/vbyte.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

namespace {

constexpr unsigned kMaxCodeLength = 64;
constexpr std::uint64_t kMaxSymbol = std::uint64_t(1) << 24;

} // namespace

CanonicalCode CanonicalCode::from_frequencies(std::span<const std::uint64_t> freq) {
    std::vector<std::uint32_t> leaves;
    for(std::uint32_t s = 0; s < freq.size(); ++s) {
        if(freq[s] > 0) leaves.push_back(s);
    }
    std::vector<std::uint8_t> lengths(freq.size(), 0);
    if(leaves.size() == 1) {
        lengths[leaves[0]] = 1;
    } else if(leaves.size() > 1) {
        // two-queue construction over leaves sorted by weight
        std::stable_sort(leaves.begin(), leaves.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return freq[a] < freq[b]; });
        const std::size_t m = leaves.size();
        // nodes [0, m) are leaves, [m, 2m-1) internal in creation order
        std::vector<std::uint64_t> weight(2 * m - 1);
        std::vector<std::size_t> parent(2 * m - 1, 0);
        for(std::size_t i = 0; i < m; ++i) weight[i] = freq[leaves[i]];

        std::size_t next_leaf = 0, next_internal = m, created = m;
        auto take = [&]() {
            if(next_leaf < m && (next_internal >= created || weight[next_leaf] <= weight[next_internal])) {
                return next_leaf++;
            }
            return next_internal++;
        };
        while(created < 2 * m - 1) {
            const std::size_t a = take();
            const std::size_t b = take();
            weight[created] = weight[a] + weight[b];
            parent[a] = parent[b] = created;
            ++created;
        }
        std::vector<unsigned> depth(2 * m - 1, 0);
        for(std::size_t v = 2 * m - 1; v-- > 0;) {
            if(v != 2 * m - 2) depth[v] = depth[parent[v]] + 1;
        }
        for(std::size_t i = 0; i < m; ++i) {
            if(depth[i] > kMaxCodeLength) throw std::length_error("Huffman code too long");
            lengths[leaves[i]] = static_cast<std::uint8_t>(depth[i]);
        }
    }
    return from_lengths(std::move(lengths));
}

CanonicalCode CanonicalCode::from_lengths(std::vector<std::uint8_t> lengths) {
    CanonicalCode c;
    c.lengths_ = std::move(lengths);
    std::size_t coded = 0;
    unsigned __int128 kraft = 0;
    for(auto l : c.lengths_) {
        if(l == 0) continue;
        if(l > kMaxCodeLength) throw DataError("Huffman: code length too large");
        ++coded;
        kraft += static_cast<unsigned __int128>(1) << (kMaxCodeLength - l);
    }
    const unsigned __int128 full = static_cast<unsigned __int128>(1) << kMaxCodeLength;
    const bool single_ok = coded == 1 && kraft == full / 2;
    if(coded > 0 && kraft != full && !single_ok) {
        throw DataError("Huffman: code lengths violate the Kraft equality");
    }
    c.assign_codes();
    return c;
}

void CanonicalCode::assign_codes() {
    sorted_.clear();
    for(std::uint32_t s = 0; s < lengths_.size(); ++s) {
        if(lengths_[s]) sorted_.push_back(s);
    }
    std::stable_sort(sorted_.begin(), sorted_.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return lengths_[a] < lengths_[b]; });
    max_length_ = sorted_.empty() ? 0 : lengths_[sorted_.back()];
    codes_.assign(lengths_.size(), 0);
    first_code_.assign(max_length_ + 1, 0);
    first_index_.assign(max_length_ + 1, 0);
    count_.assign(max_length_ + 1, 0);

    std::uint64_t code = 0;
    unsigned prev_len = sorted_.empty() ? 0 : lengths_[sorted_.front()];
    for(std::uint32_t i = 0; i < sorted_.size(); ++i) {
        const auto s = sorted_[i];
        const unsigned len = lengths_[s];
        if(len != prev_len) {
            code <<= (len - prev_len);
            prev_len = len;
        }
        if(count_[len] == 0) {
            first_code_[len] = code;
            first_index_[len] = i;
        }
        ++count_[len];
        codes_[s] = code;
        ++code;
    }
}

void CanonicalCode::write(BitWriter& out) const {
    vbyte_encode(out, sorted_.size());
    for(std::uint32_t s = 0; s < lengths_.size(); ++s) {
        if(lengths_[s] == 0) continue;
        vbyte_encode(out, s);
        vbyte_encode(out, lengths_[s]);
    }
}

CanonicalCode CanonicalCode::read(BitReader& in) {
    const std::uint64_t count = vbyte_decode(in);
    if(count > kMaxSymbol) throw DataError("Huffman header: too many symbols");
    std::vector<std::uint8_t> lengths;
    std::int64_t prev = -1;
    for(std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t s = vbyte_decode(in);
        const std::uint64_t l = vbyte_decode(in);
        if(s >= kMaxSymbol || static_cast<std::int64_t>(s) <= prev) {
            throw DataError("Huffman header: symbols not strictly increasing");
        }
        if(l == 0 || l > kMaxCodeLength) throw DataError("Huffman header: invalid code length");
        prev = static_cast<std::int64_t>(s);
        if(lengths.size() <= s) lengths.resize(s + 1, 0);
        lengths[s] = static_cast<std::uint8_t>(l);
    }
    return from_lengths(std::move(lengths));
}

void CanonicalCode::encode(BitWriter& out, std::uint32_t symbol) const {
    if(symbol >= lengths_.size() || lengths_[symbol] == 0) {
        throw std::invalid_argument("Huffman: symbol has no code");
    }
    out.write_bits(codes_[symbol], lengths_[symbol]);
}

std::uint32_t CanonicalCode::decode(BitReader& in) const {
    std::uint64_t code = 0;
    for(unsigned len = 1; len <= max_length_; ++len) {
        code = (code << 1) | (in.read_bit() ? 1u : 0u);
        if(count_[len] && code >= first_code_[len] && code - first_code_[len] < count_[len]) {
            return sorted_[first_index_[len] + (code - first_code_[len])];
        }
    }
    throw DataError("Huffman: invalid code word");
}

std::uint64_t CanonicalCode::cost(std::span<const std::uint64_t> freq) const {
    std::uint64_t bits = 0;
    for(std::size_t s = 0; s < freq.size(); ++s) {
        if(freq[s]) bits += freq[s] * length(static_cast<std::uint32_t>(s));
    }
    return bits;
}

} // namespace tdc
