#include <tdc/core/header.hpp>

#include <algorithm>
#include <string_view>

#include <tdc/util/error.hpp>

namespace tdc {

void write_header(const AlgorithmSpec& spec, Bytes& out) {
    const std::string s = serialize(spec);
    if(s.find(kHeaderSeparator) != std::string::npos) {
        throw SpecError("spec must not contain '%'");
    }
    out.insert(out.end(), s.begin(), s.end());
    out.push_back(static_cast<std::uint8_t>(kHeaderSeparator));
}

Header read_header(ByteView data) {
    const auto scan = data.first(std::min(data.size(), kMaxHeaderScan));
    const auto sep = std::find(scan.begin(), scan.end(), static_cast<std::uint8_t>(kHeaderSeparator));
    if(sep == scan.end()) {
        throw DataError("missing header: no '%' within the first " + std::to_string(kMaxHeaderScan) + " bytes");
    }
    const auto len = static_cast<std::size_t>(sep - scan.begin());
    if(len == 0) throw DataError("empty spec in header");
    const std::string_view text(reinterpret_cast<const char*>(data.data()), len);
    try {
        return Header{parse_spec(text), len + 1};
    } catch(const SpecError& e) {
        throw DataError(std::string("corrupt header: ") + e.what());
    }
}

} // namespace tdc
