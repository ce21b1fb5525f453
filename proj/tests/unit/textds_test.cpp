#include <random>

#include <gtest/gtest.h>

#include <tdc/textds/construct.hpp>
#include <tdc/textds/text.hpp>
#include <tdc/textds/textds.hpp>

#include "../common/oracles.hpp"

using namespace tdc;

namespace {

const Bytes kExample = make_text(as_view("aaababaaabaababa"));

std::vector<index_t> plus_one(std::vector<index_t> v) {
    for(auto& x : v) ++x;
    return v;
}

} // namespace

TEST(TextDS, RunningExampleRows) {
    TextDS ds(kExample);
    EXPECT_EQ(plus_one(ds.require_sa().to_vector()),
              (std::vector<index_t>{17, 16, 7, 1, 8, 11, 2, 14, 5, 9, 12, 3, 15, 6, 10, 13, 4}));
    EXPECT_EQ(ds.require_lcp().to_vector(),
              (std::vector<index_t>{0, 0, 1, 5, 2, 4, 6, 1, 3, 4, 3, 5, 0, 2, 3, 2, 4}));
    EXPECT_EQ(plus_one(ds.require_isa().to_vector()),
              (std::vector<index_t>{4, 7, 12, 17, 9, 14, 3, 5, 10, 15, 6, 11, 16, 8, 13, 2, 1}));
    EXPECT_EQ(to_string(ds.require_bwt()), std::string("abb\0ababbaaaaaaaa", 17));
}

TEST(TextDS, MatchesNaiveSuffixSorting) {
    std::mt19937_64 rng(3);
    for(int round = 0; round < 300; ++round) {
        const unsigned sigma = std::vector<unsigned>{2, 4, 26}[round % 3];
        const Bytes t = oracle::random_text(rng, 1 + rng() % 300, sigma);
        const auto sa = build_sa(t);
        const auto naive = oracle::suffix_array(t);
        ASSERT_EQ(sa, naive);
        ASSERT_EQ(build_lcp_phi(t, sa), oracle::lcp_array(t, naive));
        ASSERT_EQ(build_isa(sa), oracle::inverse(naive));
        ASSERT_EQ(build_bwt(t, sa), oracle::bwt(t, naive));
    }
}

TEST(TextDS, FullByteAlphabet) {
    Bytes t;
    std::mt19937_64 rng(4);
    for(int i = 0; i < 2000; ++i) t.push_back(static_cast<std::uint8_t>(1 + rng() % 255));
    t.push_back(0);
    EXPECT_EQ(build_sa(t), oracle::suffix_array(t));
}

TEST(TextDS, HighlyRepetitive) {
    for(const auto& s : {std::string(1000, 'a'), std::string(500, 'a') + std::string(500, 'b')}) {
        const Bytes t = make_text(as_view(s));
        const auto sa = build_sa(t);
        EXPECT_EQ(sa, oracle::suffix_array(t));
        EXPECT_EQ(build_lcp_phi(t, sa), oracle::lcp_array(t, sa));
    }
}

TEST(TextDS, ModesAgree) {
    const Bytes t = make_text(as_view("mississippi_banana_mississippi"));
    TextDS plain(t, DSMode::plain), packed(t, DSMode::compressed), delayed(t, DSMode::delayed);
    for(auto* ds : {&plain, &packed, &delayed}) ds->require(TextDS::SA | TextDS::ISA | TextDS::LCP | TextDS::BWT);
    EXPECT_EQ(plain.require_sa().to_vector(), packed.require_sa().to_vector());
    EXPECT_EQ(plain.require_lcp().to_vector(), delayed.require_lcp().to_vector());
    EXPECT_EQ(plain.require_isa().to_vector(), delayed.require_isa().to_vector());
    EXPECT_FALSE(plain.require_sa().is_packed());
    EXPECT_TRUE(packed.require_sa().is_packed());
    EXPECT_TRUE(delayed.require_sa().is_packed());
    EXPECT_LT(packed.require_sa().bytes(), plain.require_sa().bytes());
}

TEST(TextDS, SentinelOnlyText) {
    const Bytes t = make_text({});
    TextDS ds(t);
    EXPECT_EQ(ds.require_sa().to_vector(), std::vector<index_t>{0});
    EXPECT_EQ(ds.require_lcp().to_vector(), std::vector<index_t>{0});
}

TEST(Text, RejectsZeroBytes) {
    const Bytes with_zero = {'a', 0, 'b'};
    EXPECT_THROW(make_text(with_zero), DataError);
    EXPECT_THROW(strip_sentinel(to_bytes("abc")), DataError);
    EXPECT_EQ(strip_sentinel(make_text(as_view("abc"))), to_bytes("abc"));
}
