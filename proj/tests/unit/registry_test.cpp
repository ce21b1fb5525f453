#include <gtest/gtest.h>

#include <tdc/classic/encode.hpp>
#include <tdc/core/builtin.hpp>
#include <tdc/core/header.hpp>
#include <tdc/gen/generators.hpp>
#include <tdc/util/error.hpp>

using namespace tdc;

namespace {

std::string canonical(std::string_view text) {
    return serialize(default_registry().resolve(parse_spec(text), Compressor::kType));
}

} // namespace

TEST(Registry, DefaultsAreFilledInDeclarationOrder) {
    EXPECT_EQ(canonical("lzss_lcp"), "lzss_lcp(threshold=5,coder=bit)");
    EXPECT_EQ(canonical("lcpcomp(t=5,arrays,scans(a=25))"),
              "lcpcomp(coder=sle,threshold=5,comp=arrays,dec=scans(alpha=25))");
    EXPECT_EQ(canonical("lz78u(coder = bit, comp = buffering(string_coder = huff), threshold = 3)"),
              "lz78u(coder=bit,comp=buffering(string_coder=huff),threshold=3)");
    EXPECT_EQ(canonical("lz78u(t=5,huff)"), "lz78u(coder=huff,comp=buffering(string_coder=huff),threshold=5)");
    EXPECT_EQ(canonical("bwt:rle"), "bwt:rle");
}

TEST(Registry, AliasesExpand) {
    EXPECT_EQ(canonical("bwtzip"), "bwt:rle:mtf:encode(coder=huff)");
    EXPECT_EQ(canonical("huff"), "encode(coder=huff)");
    EXPECT_EQ(canonical("rle:bwtzip"), "rle:bwt:rle:mtf:encode(coder=huff)");
}

TEST(Registry, InstantiatesEncodeWrapper) {
    auto c = make_compressor("encode(huff)");
    EXPECT_NE(std::dynamic_pointer_cast<EncodeCompressor>(c), nullptr);
    auto p = make_compressor("bwt:rle:mtf");
    auto pipeline = std::dynamic_pointer_cast<Pipeline>(p);
    ASSERT_NE(pipeline, nullptr);
    EXPECT_EQ(pipeline->size(), 3u);
}

TEST(Registry, Errors) {
    EXPECT_THROW(make_compressor("nope"), SpecError);
    EXPECT_THROW(make_compressor("lzss_lcp(threshold=bit)"), SpecError);
    EXPECT_THROW(make_compressor("lzss_lcp(coder=5)"), SpecError);
    EXPECT_THROW(make_compressor("lzss_lcp(coder=bwt)"), SpecError);
    EXPECT_THROW(make_compressor("lzss_lcp(foo=1)"), SpecError);
    EXPECT_THROW(make_compressor("lzss_lcp(t=1,threshold=2)"), SpecError);
    EXPECT_THROW(make_compressor("lzss_lcp(t=0)"), SpecError);
    EXPECT_THROW(make_compressor("lcpcomp(dec=scans(a=-1))"), SpecError);
    EXPECT_THROW(make_compressor("bwtzip(5)"), SpecError);
    EXPECT_THROW(make_compressor("encode(bit:bit)"), SpecError);
}

TEST(Registry, DuplicateRegistrationRejected) {
    Registry r;
    register_builtins(r);
    EXPECT_THROW(register_builtins(r), std::logic_error);
    EXPECT_THROW(Meta("compressor", "bad id"), std::logic_error);
    EXPECT_THROW(Meta("compressor", "x").param_int("a").param_int("a"), std::logic_error);
}

TEST(Registry, ListsEveryType) {
    const auto& r = default_registry();
    EXPECT_EQ(r.list("coder").size(), 6u);
    EXPECT_EQ(r.list("lcpcomp_strategy").size(), 2u);
    EXPECT_EQ(r.list("lcpcomp_dec").size(), 2u);
    EXPECT_EQ(r.list("lz78u_strategy").size(), 2u);
    EXPECT_EQ(r.list("generator").size(), 5u);
    EXPECT_EQ(r.list("compressor").size(), 9u);
}

TEST(Builtin, HeaderRoundTrip) {
    const Bytes input = to_bytes("aaababaaabaababa");
    for(const char* spec : {"bwt", "bwt:rle", "lz78u", "lcpcomp", "bwtzip", "lzss_lcp(t=2)"}) {
        const Bytes packed = compress_with_header(spec, input);
        const auto h = read_header(packed);
        EXPECT_EQ(serialize(h.spec), canonical(spec));
        EXPECT_EQ(decompress_with_header(packed), input) << spec;
    }
}

TEST(Builtin, OverrideKeepsHeaderArguments) {
    const Bytes input = repetitive_text(20000, 3);
    const Bytes packed = compress_with_header("lcpcomp(coder=huff,t=6)", input);
    const auto merged = merge_override(read_header(packed).spec, parse_spec("lcpcomp(dec=scans(a=6))"));
    EXPECT_EQ(serialize(default_registry().resolve(merged, "compressor")),
              "lcpcomp(coder=huff,threshold=6,comp=heap,dec=scans(alpha=6))");
    EXPECT_EQ(decompress_with_header(packed, parse_spec("lcpcomp(dec=scans(a=6))")), input);
    EXPECT_EQ(decompress_with_header(packed, parse_spec("lcpcomp(scans(1))")), input);
}

TEST(Builtin, OverrideWithDifferentAlgorithmReplacesHeader) {
    const Bytes packed = compress_with_header("bwt", to_bytes("banana"));
    const auto merged = merge_override(read_header(packed).spec, parse_spec("rle"));
    EXPECT_EQ(serialize(merged), "rle");
}

TEST(Builtin, CorruptHeaderIsDataError) {
    EXPECT_THROW(decompress_with_header(to_bytes("nope%abc")), DataError);
    EXPECT_THROW(decompress_with_header(to_bytes("lzss_lcp(t=0)%abc")), DataError);
    EXPECT_THROW(decompress_with_header(to_bytes("no header")), DataError);
}

TEST(Builtin, PipelineEqualsManualChaining) {
    const Bytes input = repetitive_text(30000, 11);
    const Bytes a = make_compressor("bwt")->compress(input);
    const Bytes b = make_compressor("rle")->compress(a);
    EXPECT_EQ(make_compressor("bwt:rle")->compress(input), b);
}

TEST(Builtin, EncodeOfEmptyInputHasEmptyBody) {
    const Bytes packed = compress_with_header("encode(bit)", {});
    EXPECT_EQ(to_string(packed), "encode(coder=bit)%");
    EXPECT_TRUE(decompress_with_header(packed).empty());
}
