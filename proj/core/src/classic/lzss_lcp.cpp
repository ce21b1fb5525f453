#include <tdc/classic/lzss_lcp.hpp>

#include <algorithm>

#include <tdc/coders/elias.hpp>
#include <tdc/coders/vbyte.hpp>
#include <tdc/core/stats.hpp>
#include <tdc/textds/text.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

std::size_t count_references(const std::vector<Lz77Factor>& factors) {
    return static_cast<std::size_t>(
        std::count_if(factors.begin(), factors.end(), [](const Lz77Factor& f) { return !f.literal; }));
}

std::string render_factors(ByteView text, const std::vector<Lz77Factor>& factors) {
    std::string out;
    for(const auto& f : factors) {
        if(!out.empty()) out += ' ';
        if(f.literal) {
            for(std::size_t k = 0; k < f.len; ++k) {
                const auto c = text[f.pos + k];
                out += c == kSentinel ? '$' : static_cast<char>(c);
            }
        } else {
            out += '(' + std::to_string(f.src + 1) + ',' + std::to_string(f.len) + ')';
        }
    }
    return out;
}

std::vector<Lz77Factor> lzss_lcp_factorize(TextDS& ds, index_t threshold) {
    if(threshold == 0) throw std::invalid_argument("lzss_lcp: threshold must be >= 1");
    const auto text = ds.text();
    const std::size_t n = text.size();
    const auto sa = ds.require_sa().to_vector();
    const auto& lcp_arr = ds.require_lcp();
    const auto& isa = ds.require_isa();

    // previous/next smaller value of each SA entry, n = none
    const auto none = static_cast<index_t>(n);
    std::vector<index_t> psv(n, none), nsv(n, none);
    {
        std::vector<index_t> stack;
        for(std::size_t r = 0; r < n; ++r) {
            while(!stack.empty() && sa[stack.back()] > sa[r]) {
                nsv[stack.back()] = static_cast<index_t>(r);
                stack.pop_back();
            }
            psv[r] = stack.empty() ? none : stack.back();
            stack.push_back(static_cast<index_t>(r));
        }
    }

    auto match = [&](index_t r, std::size_t d) -> std::size_t {
        if(r == none) return 0;
        std::size_t l = 0;
        const std::size_t s = sa[r];
        while(d + l < n && text[s + l] == text[d + l]) ++l;
        return l;
    };

    std::vector<Lz77Factor> factors;
    std::size_t d = 0;
    while(d < n) {
        const index_t r = isa[d];
        const std::size_t len = std::max(match(psv[r], d), match(nsv[r], d));
        if(len >= threshold) {
            // smallest source among all suffixes sharing `len` characters with d
            std::size_t lo = r, hi = r;
            while(lo > 0 && lcp_arr[lo] >= len) --lo;
            while(hi + 1 < n && lcp_arr[hi + 1] >= len) ++hi;
            index_t src = sa[lo];
            for(std::size_t k = lo + 1; k <= hi; ++k) src = std::min(src, sa[k]);
            factors.push_back({static_cast<index_t>(d), static_cast<index_t>(len), src, false});
            d += len;
        } else {
            if(!factors.empty() && factors.back().literal) {
                ++factors.back().len;
            } else {
                factors.push_back({static_cast<index_t>(d), 1, 0, true});
            }
            ++d;
        }
    }
    return factors;
}

Bytes encode_lz77(const std::vector<Lz77Factor>& factors, ByteView text, const Coder& coder) {
    const std::size_t n = text.size();
    std::vector<ByteView> runs;
    for(const auto& f : factors) {
        if(f.literal) runs.push_back(text.subspan(f.pos, f.len));
    }
    auto lit = coder.literal_encoder(runs);
    BitWriter out;
    vbyte_encode(out, n);
    lit->write_model(out);
    for(const auto& f : factors) {
        if(f.literal) {
            out.write_bit(false);
            gamma_encode(out, f.len);
            lit->encode(out, text.subspan(f.pos, f.len));
        } else {
            out.write_bit(true);
            coder.encode_int(out, f.src, f.pos);
            coder.encode_int(out, f.len - 1, n - f.pos);
        }
    }
    return std::move(out).finish();
}

Bytes decode_lz77(ByteView body, const Coder& coder) {
    BitReader in(body);
    const auto n = vbyte_decode(in);
    if(n > (std::uint64_t(1) << 32) - 2) throw DataError("LZ77 stream: text too long");
    auto lit = coder.literal_decoder();
    lit->read_model(in);
    Bytes text;
    text.reserve(n);
    while(text.size() < n) {
        const std::size_t pos = text.size();
        if(!in.read_bit()) {
            const auto len = gamma_decode(in);
            if(len > n - pos) throw DataError("LZ77 stream: literal run exceeds text");
            lit->decode(in, len, text);
        } else {
            if(pos == 0) throw DataError("LZ77 stream: reference at position 0");
            const auto src = coder.decode_int(in, pos);
            const auto len = coder.decode_int(in, n - pos) + 1;
            for(std::uint64_t k = 0; k < len; ++k) text.push_back(text[src + k]);
        }
    }
    return text;
}

Bytes LzssLcpCompressor::compress(ByteView input) const {
    const Bytes text = make_text(input);
    TextDS ds(text);
    std::vector<Lz77Factor> factors;
    {
        StatPhase phase("Factorize");
        factors = lzss_lcp_factorize(ds, threshold_);
        phase.log_stat("factor_count", count_references(factors));
    }
    StatPhase phase("Encode");
    return encode_lz77(factors, text, *coder_);
}

Bytes LzssLcpCompressor::decompress(ByteView input) const {
    StatPhase phase("Decode");
    return strip_sentinel(decode_lz77(input, *coder_));
}

} // namespace tdc
