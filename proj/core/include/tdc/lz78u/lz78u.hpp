#pragma once

#include <memory>
#include <string>
#include <vector>

#include <tdc/coders/coder.hpp>
#include <tdc/core/compressor.hpp>
#include <tdc/lz78u/suffix_tree.hpp>

namespace tdc {

/// LZ78U factor x: F_x = F_ref + label, the label being the text interval
/// [begin, begin + len). ref = 0 denotes the empty factor.
struct Lz78uFactor {
    index_t ref = 0;
    index_t begin = 0;
    index_t len = 0;
};

/// Factor list together with the suffix tree node of every factor (a leaf
/// for factors that end inside a leaf edge).
struct Lz78uFactorization {
    std::vector<Lz78uFactor> factors;
    std::vector<SuffixTree::node_t> nodes;
};

/// Streaming algorithm: factor ids are stored per internal node and the
/// next factor is found from the leaf of the current position.
Lz78uFactorization lz78u_factorize_stream(const SuffixTree& st);

/// Offline algorithm: LZ-tree nodes are marked in a bit vector first, then
/// referred indices and labels are read off the marked nodes with rank.
Lz78uFactorization lz78u_factorize_offline(const SuffixTree& st);

/// True if both lists have the same refs and equal label strings.
bool same_factors(ByteView text, const std::vector<Lz78uFactor>& a, const std::vector<Lz78uFactor>& b);

/// Renders factors as "(0,a)(1,a)(0,ba)" with 0x00 shown as '$'.
std::string render_lz78u(ByteView text, const std::vector<Lz78uFactor>& factors);

/// Token of a re-factorized label: a previous factor id, or a run of
/// literal bytes [begin, begin + len) of the text.
struct LabelToken {
    bool literal = true;
    index_t factor = 0; // for references, 1-based factor id
    index_t begin = 0;
    index_t len = 0;
};

/// Greedily splits every label into the longest previous factors with
/// string depth >= threshold and single bytes; adjacent bytes are merged
/// into literal runs. Result is indexed like the factors.
std::vector<std::vector<LabelToken>> lz78u_buffer_labels(const SuffixTree& st, const Lz78uFactorization& f,
                                                         index_t threshold);

/// How labels are coded.
class Lz78uStrategy {
public:
    static constexpr const char* kType = "lz78u_strategy";
    virtual ~Lz78uStrategy() = default;

    /// Writes VByte(z), the literal model and per factor x (1-based) the ref
    /// through `coder` with universe x followed by the label.
    virtual void encode(BitWriter& out, const SuffixTree& st, const Lz78uFactorization& f, const Coder& coder,
                        index_t threshold) const = 0;
    /// Decodes what encode wrote and returns the text of length n.
    virtual Bytes decode(BitReader& in, std::size_t n, const Coder& coder) const = 0;
};

/// Labels as gamma(length) and the bytes through the string coder.
class Lz78uPlainStrategy final : public Lz78uStrategy {
public:
    explicit Lz78uPlainStrategy(std::shared_ptr<Coder> string_coder) : string_coder_(std::move(string_coder)) {}
    void encode(BitWriter& out, const SuffixTree& st, const Lz78uFactorization& f, const Coder& coder,
                index_t threshold) const override;
    Bytes decode(BitReader& in, std::size_t n, const Coder& coder) const override;

private:
    std::shared_ptr<Coder> string_coder_;
};

/// Labels as gamma(length) and a token stream: flag 1 + factor id through
/// the integer coder, or flag 0 + gamma(run length) + run via the string coder.
class Lz78uBufferingStrategy final : public Lz78uStrategy {
public:
    explicit Lz78uBufferingStrategy(std::shared_ptr<Coder> string_coder) : string_coder_(std::move(string_coder)) {}
    void encode(BitWriter& out, const SuffixTree& st, const Lz78uFactorization& f, const Coder& coder,
                index_t threshold) const override;
    Bytes decode(BitReader& in, std::size_t n, const Coder& coder) const override;

private:
    std::shared_ptr<Coder> string_coder_;
};

/// Stream: VByte(n), then the strategy's output.
class Lz78uCompressor final : public Compressor {
public:
    Lz78uCompressor(std::shared_ptr<Coder> coder, std::shared_ptr<Lz78uStrategy> strategy, index_t threshold)
        : coder_(std::move(coder)), strategy_(std::move(strategy)), threshold_(threshold) {}

    Bytes compress(ByteView input) const override;
    Bytes decompress(ByteView input) const override;

private:
    std::shared_ptr<Coder> coder_;
    std::shared_ptr<Lz78uStrategy> strategy_;
    index_t threshold_;
};

} // namespace tdc
