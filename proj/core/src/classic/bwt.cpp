#include <tdc/classic/bwt.hpp>

#include <array>

#include <tdc/core/stats.hpp>
#include <tdc/textds/text.hpp>
#include <tdc/textds/textds.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

Bytes bwt_forward(ByteView input) {
    const Bytes text = make_text(input);
    TextDS ds(text);
    StatPhase phase("BWT");
    return ds.require_bwt();
}

Bytes bwt_inverse(ByteView bwt) {
    StatPhase phase("Inverse BWT");
    const std::size_t n = bwt.size();
    std::array<std::size_t, 257> c{};
    std::size_t sentinels = 0;
    for(auto b : bwt) {
        ++c[b + 1];
        if(b == kSentinel) ++sentinels;
    }
    if(sentinels != 1) throw DataError("inverse BWT: input must contain exactly one 0x00 byte");
    for(std::size_t i = 1; i < c.size(); ++i) c[i] += c[i - 1];

    // lf[j] = C[bwt[j]] + occurrences of bwt[j] in bwt[0, j)
    std::vector<index_t> lf(n);
    std::array<std::size_t, 256> seen{};
    for(std::size_t j = 0; j < n; ++j) {
        const auto b = bwt[j];
        lf[j] = static_cast<index_t>(c[b] + seen[b]++);
    }

    // Row 0 is the sentinel suffix; bwt[0] is the byte before it.
    Bytes text(n);
    text[n - 1] = kSentinel;
    std::size_t j = 0;
    for(std::size_t k = n - 1; k-- > 0;) {
        if(bwt[j] == kSentinel) throw DataError("inverse BWT: input is not a valid BWT");
        text[k] = bwt[j];
        j = lf[j];
    }
    if(bwt[j] != kSentinel) throw DataError("inverse BWT: input is not a valid BWT");
    return strip_sentinel(std::move(text));
}

} // namespace tdc
