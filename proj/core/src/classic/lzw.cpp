#include <tdc/classic/lzw.hpp>

#include <unordered_map>

#include <tdc/coders/vbyte.hpp>
#include <tdc/core/stats.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

std::vector<std::uint32_t> lzw_factorize(ByteView input) {
    std::vector<std::uint32_t> codes;
    if(input.empty()) return codes;
    std::unordered_map<std::uint64_t, std::uint32_t> dict;
    std::uint32_t next = 256;
    std::uint32_t w = input[0];
    for(std::size_t i = 1; i < input.size(); ++i) {
        const std::uint64_t key = (std::uint64_t(w) << 8) | input[i];
        auto it = dict.find(key);
        if(it != dict.end()) {
            w = it->second;
        } else {
            codes.push_back(w);
            dict.emplace(key, next++);
            w = input[i];
        }
    }
    codes.push_back(w);
    return codes;
}

Bytes lzw_expand(const std::vector<std::uint32_t>& codes) {
    // entry e >= 256 is entry prefix[e] followed by byte last[e]
    std::vector<std::uint32_t> prefix;
    std::vector<std::uint8_t> first, last;
    Bytes out, buf;
    auto first_of = [&](std::uint32_t c) { return c < 256 ? static_cast<std::uint8_t>(c) : first[c - 256]; };
    auto emit = [&](std::uint32_t c) {
        buf.clear();
        while(c >= 256) {
            buf.push_back(last[c - 256]);
            c = prefix[c - 256];
        }
        buf.push_back(static_cast<std::uint8_t>(c));
        out.insert(out.end(), buf.rbegin(), buf.rend());
    };
    for(std::size_t k = 0; k < codes.size(); ++k) {
        const auto c = codes[k];
        const std::uint32_t size = 256 + static_cast<std::uint32_t>(prefix.size());
        if(c > size || (k == 0 && c >= 256)) throw DataError("LZW: codeword outside dictionary");
        if(k > 0) {
            const auto prev = codes[k - 1];
            // c == size is the case where the new entry is prev + first(prev)
            const std::uint8_t f = c == size ? first_of(prev) : first_of(c);
            prefix.push_back(prev);
            first.push_back(first_of(prev));
            last.push_back(f);
        } else if(c == size) {
            throw DataError("LZW: codeword outside dictionary");
        }
        emit(c);
    }
    return out;
}

Bytes LzwCompressor::compress(ByteView input) const {
    std::vector<std::uint32_t> codes;
    {
        StatPhase phase("Factorize");
        codes = lzw_factorize(input);
        phase.log_stat("code_count", codes.size());
    }
    StatPhase phase("Encode");
    BitWriter out;
    vbyte_encode(out, codes.size());
    for(std::size_t k = 0; k < codes.size(); ++k) coder_->encode_int(out, codes[k], 256 + k);
    return std::move(out).finish();
}

Bytes LzwCompressor::decompress(ByteView input) const {
    BitReader in(input);
    const auto count = vbyte_decode(in);
    if(count > input.size() * 8) throw DataError("LZW: code count exceeds stream size");
    std::vector<std::uint32_t> codes;
    codes.reserve(count);
    for(std::uint64_t k = 0; k < count; ++k) {
        codes.push_back(static_cast<std::uint32_t>(coder_->decode_int(in, 256 + k)));
    }
    return lzw_expand(codes);
}

} // namespace tdc
