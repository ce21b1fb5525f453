#include <random>

#include <gtest/gtest.h>

#include <tdc/coders/coders.hpp>
#include <tdc/gen/generators.hpp>
#include <tdc/lz78u/lz78u.hpp>
#include <tdc/lz78u/suffix_tree.hpp>
#include <tdc/textds/text.hpp>
#include <tdc/textds/textds.hpp>

#include "../common/oracles.hpp"

using namespace tdc;

namespace {

const Bytes kRunning = make_text(as_view("aaababaaabaababa"));

ByteView node_string(const SuffixTree& st, SuffixTree::node_t v) {
    return st.text().subspan(st.position(v), st.str_depth(v));
}

} // namespace

TEST(SuffixTree, StructureMatchesNaive) {
    std::mt19937_64 rng(31);
    for(int round = 0; round < 200; ++round) {
        const Bytes text = oracle::random_text(rng, rng() % 120, 1 + rng() % 4);
        TextDS ds(text);
        const SuffixTree st(ds);
        const auto sa = oracle::suffix_array(text);
        ASSERT_EQ(st.leaves(), text.size());
        for(index_t i = 0; i < text.size(); ++i) {
            const auto leaf = st.leaf_select(i);
            ASSERT_TRUE(st.is_leaf(leaf));
            EXPECT_EQ(st.position(leaf), sa[i]);
            EXPECT_EQ(st.str_depth(leaf), text.size() - sa[i]);
        }
        index_t internal = 0;
        for(SuffixTree::node_t v = 0; v < st.size(); ++v) {
            if(!st.is_leaf(v)) {
                EXPECT_EQ(st.internal_rank(v), internal++);
            }
            if(v != st.root()) {
                const auto p = st.parent(v);
                EXPECT_LT(p, v);
                EXPECT_EQ(st.depth(v), st.depth(p) + 1);
                EXPECT_GT(st.str_depth(v), st.str_depth(p));
                const auto s = node_string(st, v);
                EXPECT_TRUE(std::equal(node_string(st, p).begin(), node_string(st, p).end(), s.begin()));
                EXPECT_EQ(st.child(p, text[st.edge_begin(v)]), v);
                // internal nodes are right-branching: at least two occurrences
                if(!st.is_leaf(v)) {
                    EXPECT_GE(oracle::occurrences(text, s), 2u);
                }
                for(index_t d = 0; d <= st.depth(v); ++d) {
                    auto u = v;
                    while(st.depth(u) > d) u = st.parent(u);
                    ASSERT_EQ(st.level_anc(v, d), u);
                }
            }
            std::int32_t prev = -1;
            for(auto c : st.children(v)) {
                const std::int32_t first = text[st.edge_begin(c)];
                EXPECT_GT(first, prev);
                prev = first;
            }
        }
        EXPECT_EQ(st.child(st.root(), 0xFF), SuffixTree::kNone);
    }
}

TEST(Lz78u, RunningExample) {
    TextDS ds(kRunning);
    const SuffixTree st(ds);
    EXPECT_EQ(render_lz78u(kRunning, lz78u_factorize_stream(st).factors), "(0,a)(1,a)(0,ba)(3,a)(1,ba)(5,ba)(0,$)");
    EXPECT_EQ(render_lz78u(kRunning, lz78u_factorize_offline(st).factors), "(0,a)(1,a)(0,ba)(3,a)(1,ba)(5,ba)(0,$)");
}

TEST(Lz78u, SentinelOnly) {
    const Bytes text{0};
    TextDS ds(text);
    const SuffixTree st(ds);
    EXPECT_EQ(render_lz78u(text, lz78u_factorize_stream(st).factors), "(0,$)");
}

TEST(Lz78u, StreamOfflineAndOracleAgree) {
    std::mt19937_64 rng(32);
    for(int round = 0; round < 500; ++round) {
        const Bytes text = oracle::random_text(rng, rng() % 200, 1 + rng() % 5);
        TextDS ds(text);
        const SuffixTree st(ds);
        const auto a = lz78u_factorize_stream(st);
        const auto b = lz78u_factorize_offline(st);
        ASSERT_TRUE(same_factors(text, a.factors, oracle::lz78u(text)));
        ASSERT_TRUE(same_factors(text, a.factors, b.factors));
        ASSERT_EQ(a.nodes, b.nodes);
        index_t pos = 0;
        for(const auto& f : a.factors) {
            index_t ref_len = 0;
            for(auto r = f.ref; r != 0; r = a.factors[r - 1].ref) ref_len += a.factors[r - 1].len;
            EXPECT_EQ(f.begin, pos + ref_len);
            pos = f.begin + f.len;
        }
        EXPECT_EQ(pos, text.size());
    }
}

TEST(Lz78u, BufferedLabelsReassemble) {
    const Bytes text = make_text(repetitive_text(5000, 3));
    TextDS ds(text);
    const SuffixTree st(ds);
    const auto f = lz78u_factorize_stream(st);
    for(index_t t : {1u, 3u, 8u}) {
        const auto labels = lz78u_buffer_labels(st, f, t);
        ASSERT_EQ(labels.size(), f.factors.size());
        for(std::size_t x = 0; x < labels.size(); ++x) {
            Bytes got;
            for(const auto& tok : labels[x]) {
                if(tok.literal) {
                    got.insert(got.end(), text.begin() + tok.begin, text.begin() + tok.begin + tok.len);
                } else {
                    ASSERT_LT(tok.factor, x + 1);
                    ASSERT_FALSE(st.is_leaf(f.nodes[tok.factor - 1]));
                    EXPECT_GE(st.str_depth(f.nodes[tok.factor - 1]), t);
                    const auto s = node_string(st, f.nodes[tok.factor - 1]);
                    got.insert(got.end(), s.begin(), s.end());
                }
            }
            const auto& fx = f.factors[x];
            EXPECT_EQ(got, Bytes(text.begin() + fx.begin, text.begin() + fx.begin + fx.len)) << "factor " << x + 1;
        }
    }
}

TEST(Lz78u, CompressorRoundTrip) {
    const Bytes inputs[] = {Bytes{}, to_bytes("a"), repetitive_text(30000, 4), random_text(3000, 5, 4),
                            thue_morse_word(10)};
    for(const auto& coder : {make_bit_coder(), make_gamma_coder(), make_huffman_coder(), make_sle_coder()}) {
        for(const auto& strategy : {std::shared_ptr<Lz78uStrategy>(std::make_shared<Lz78uPlainStrategy>(coder)),
                                    std::shared_ptr<Lz78uStrategy>(std::make_shared<Lz78uBufferingStrategy>(coder))}) {
            for(index_t t : {1u, 5u}) {
                const Lz78uCompressor c(coder, strategy, t);
                for(const auto& in : inputs) ASSERT_EQ(c.decompress(c.compress(in)), in);
            }
        }
    }
}

TEST(Lz78u, BufferingIsSmallerOnRepetitiveText) {
    const Bytes input = repetitive_text(200000, 7);
    const auto coder = make_huffman_coder();
    const Lz78uCompressor plain(coder, std::make_shared<Lz78uPlainStrategy>(coder), 5);
    const Lz78uCompressor buffering(coder, std::make_shared<Lz78uBufferingStrategy>(coder), 5);
    EXPECT_LT(buffering.compress(input).size(), plain.compress(input).size());
}

TEST(Lz78u, CorruptStreamThrows) {
    const auto coder = make_bit_coder();
    const Lz78uCompressor c(coder, std::make_shared<Lz78uBufferingStrategy>(coder), 3);
    const Bytes data = c.compress(to_bytes("mississippi mississippi mississippi"));
    EXPECT_THROW(c.decompress(ByteView(data).first(data.size() / 2)), DataError);
}
