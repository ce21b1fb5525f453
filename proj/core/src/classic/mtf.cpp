#include <tdc/classic/mtf.hpp>

#include <algorithm>
#include <array>
#include <numeric>

namespace tdc {

namespace {

std::array<std::uint8_t, 256> identity_table() {
    std::array<std::uint8_t, 256> t;
    std::iota(t.begin(), t.end(), std::uint8_t(0));
    return t;
}

void move_to_front(std::array<std::uint8_t, 256>& t, std::size_t idx) {
    const auto c = t[idx];
    std::copy_backward(t.begin(), t.begin() + idx, t.begin() + idx + 1);
    t[0] = c;
}

} // namespace

Bytes mtf_encode(ByteView input) {
    auto t = identity_table();
    Bytes out;
    out.reserve(input.size());
    for(auto c : input) {
        const auto idx = static_cast<std::size_t>(std::find(t.begin(), t.end(), c) - t.begin());
        out.push_back(static_cast<std::uint8_t>(idx));
        move_to_front(t, idx);
    }
    return out;
}

Bytes mtf_decode(ByteView input) {
    auto t = identity_table();
    Bytes out;
    out.reserve(input.size());
    for(auto idx : input) {
        out.push_back(t[idx]);
        move_to_front(t, idx);
    }
    return out;
}

} // namespace tdc
