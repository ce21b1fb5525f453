#include <tdc/classic/rle.hpp>

#include <tdc/coders/vbyte.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

Bytes rle_encode(ByteView input) {
    Bytes out;
    out.reserve(input.size());
    std::size_t i = 0;
    while(i < input.size()) {
        const auto c = input[i];
        std::size_t k = 1;
        while(i + k < input.size() && input[i + k] == c) ++k;
        out.push_back(c);
        if(k >= 2) {
            out.push_back(c);
            vbyte_encode(k - 2, out);
        }
        i += k;
    }
    return out;
}

Bytes rle_decode(ByteView input) {
    Bytes out;
    out.reserve(input.size());
    std::size_t i = 0;
    while(i < input.size()) {
        const auto c = input[i++];
        if(i < input.size() && input[i] == c) {
            ++i;
            const auto m = vbyte_decode(input, i);
            if(m > (std::uint64_t(1) << 40)) throw DataError("RLE: run length too large");
            out.insert(out.end(), static_cast<std::size_t>(m) + 2, c);
        } else {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace tdc
