#include <cctype>

#include <gtest/gtest.h>

#include <tdc/core/builtin.hpp>
#include <tdc/core/spec.hpp>

#include "../common/corpus.hpp"

using namespace tdc;

namespace {

const std::vector<std::string> kSpecs = {
    "bwt",
    "rle",
    "mtf",
    "bwtzip",
    "huff",
    "encode(sle)",
    "lz78(gamma)",
    "lzw(vbyte)",
    "lzss_lcp(t=3,coder=huff)",
    "lcpcomp(t=3,comp=heap,dec=compact)",
    "lcpcomp(t=5,comp=arrays,dec=scans(a=6))",
    "lcpcomp(coder=delta,t=1)",
    "lz78u(t=5,coder=huff,comp=buffering)",
    "lz78u(coder=bit,comp=plain(gamma))",
    "bwt:mtf:rle:encode(delta)",
};

const std::vector<corpus::Item>& items() {
    static const auto c = corpus::edge_cases(false);
    return c;
}

class RoundTrip : public ::testing::TestWithParam<std::string> {};

} // namespace

TEST_P(RoundTrip, SmallCorpus) {
    for(const auto& item : items()) {
        const Bytes packed = compress_with_header(GetParam(), item.data);
        EXPECT_EQ(decompress_with_header(packed), item.data) << item.name;
    }
}

TEST_P(RoundTrip, HeaderIsCanonicalSpec) {
    const Bytes packed = compress_with_header(GetParam(), as_view("abc"));
    const auto resolved = serialize(default_registry().resolve(parse_spec(GetParam()), "compressor"));
    ASSERT_GE(packed.size(), resolved.size() + 1);
    EXPECT_EQ(to_string(ByteView(packed).first(resolved.size() + 1)), resolved + "%");
}

INSTANTIATE_TEST_SUITE_P(Specs, RoundTrip, ::testing::ValuesIn(kSpecs), [](const auto& info) {
    std::string name;
    for(char c : info.param) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return name;
});
