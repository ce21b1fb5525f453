#include <random>

#include <gtest/gtest.h>

#include <tdc/succinct/bit_io.hpp>
#include <tdc/succinct/bit_vector.hpp>
#include <tdc/succinct/packed_int_array.hpp>

#include "../common/oracles.hpp"

using namespace tdc;

TEST(RankSelect, MatchesLinearScan) {
    std::mt19937_64 rng(1);
    for(int round = 0; round < 200; ++round) {
        const std::size_t n = rng() % 3000;
        const unsigned density = 1 + rng() % 8;
        std::vector<bool> bits(n);
        BitVector bv(n);
        for(std::size_t i = 0; i < n; ++i) {
            bits[i] = rng() % density == 0;
            bv.set(i, bits[i]);
        }
        RankSelect rs(bv);
        for(std::size_t i = 0; i <= n; ++i) ASSERT_EQ(rs.rank1(i), oracle::rank1(bits, i));
        ASSERT_EQ(rs.ones(), oracle::rank1(bits, n));
        for(std::size_t k = 1; k <= rs.ones(); ++k) ASSERT_EQ(rs.select1(k), oracle::select1(bits, k));
    }
}

TEST(RankSelect, OneBasedRankConvention) {
    // 1-based rank of bit i (counting bv[1..i]) equals rank1(i) here
    BitVector bv(8);
    for(std::size_t i : {1u, 3u, 4u, 7u}) bv.set(i);
    RankSelect rs(bv);
    EXPECT_EQ(rs.rank1(0), 0u);
    EXPECT_EQ(rs.rank1(2), 1u);
    EXPECT_EQ(rs.rank1(5), 3u);
    EXPECT_EQ(rs.rank1(8), 4u);
    EXPECT_EQ(rs.select1(1), 1u);
    EXPECT_EQ(rs.select1(4), 7u);
    EXPECT_EQ(rs.rank0(8), 4u);
}

TEST(RankSelect, DenseAndEmpty) {
    BitVector full(5000, true);
    RankSelect rs(full);
    EXPECT_EQ(rs.rank1(4097), 4097u);
    EXPECT_EQ(rs.select1(5000), 4999u);
    BitVector none(700);
    RankSelect rz(none);
    EXPECT_EQ(rz.ones(), 0u);
    EXPECT_EQ(rz.rank1(700), 0u);
}

TEST(PackedIntArray, StoresValuesAtEveryWidth) {
    std::mt19937_64 rng(2);
    for(unsigned w = 1; w <= 64; ++w) {
        PackedIntArray a(300, w);
        std::vector<std::uint64_t> ref(300);
        const std::uint64_t mask = w == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << w) - 1;
        for(std::size_t i = 0; i < 300; ++i) {
            ref[i] = rng() & mask;
            a.set(i, ref[i]);
        }
        for(std::size_t i = 0; i < 300; ++i) ASSERT_EQ(a.get(i), ref[i]) << "width " << w;
        EXPECT_LE(a.bytes(), (300 * w + 63) / 64 * 8);
    }
}

TEST(BitIO, MsbFirstLayout) {
    BitWriter w;
    w.write_bit(true);
    w.write_bits(0b0101, 4);
    const Bytes b = std::move(w).finish();
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0], 0b10101000);
    BitReader r(b);
    EXPECT_TRUE(r.read_bit());
    EXPECT_EQ(r.read_bits(4), 0b0101u);
    EXPECT_EQ(r.bits_left(), 3u);
    r.read_bits(3);
    EXPECT_THROW(r.read_bit(), DataError);
}
