#pragma once

#include <functional>
#include <memory>
#include <vector>

#include <tdc/classic/lzss.hpp>
#include <tdc/coders/coder.hpp>
#include <tdc/core/compressor.hpp>
#include <tdc/textds/textds.hpp>

namespace tdc {

struct LcpcompFactorizeStats {
    std::size_t decrease_count = 0;
    std::size_t double_decrease_count = 0;
    std::size_t delayed_count = 0; // arrays strategy: entries moved to a lower bucket
};

/// Called with the current LCP array after each reported reference
/// (arrays strategy only).
using LcpObserver = std::function<void(const std::vector<index_t>& lcp)>;

/// Computes the lcpcomp references (literal == false), sorted by position.
/// Among equal maximal lengths the larger text position is chosen first.
class LcpcompStrategy {
public:
    static constexpr const char* kType = "lcpcomp_strategy";
    virtual ~LcpcompStrategy() = default;
    virtual std::vector<Lz77Factor> factorize(TextDS& ds, index_t threshold,
                                              LcpcompFactorizeStats* stats = nullptr) const = 0;
};

class LcpcompHeapStrategy final : public LcpcompStrategy {
public:
    std::vector<Lz77Factor> factorize(TextDS& ds, index_t threshold,
                                      LcpcompFactorizeStats* stats = nullptr) const override;
};

class LcpcompArraysStrategy final : public LcpcompStrategy {
public:
    std::vector<Lz77Factor> factorize(TextDS& ds, index_t threshold,
                                      LcpcompFactorizeStats* stats = nullptr) const override;
    std::vector<Lz77Factor> factorize(TextDS& ds, index_t threshold, LcpcompFactorizeStats* stats,
                                      const LcpObserver& observer) const;
};

/// Interleaves references with the literal runs between them.
std::vector<Lz77Factor> with_literal_runs(std::size_t n, const std::vector<Lz77Factor>& refs);

/// Parsed lcpcomp stream: all factors in position order and the literal
/// bytes of the literal factors, concatenated.
struct LcpcompStream {
    std::size_t n = 0;
    index_t threshold = 0;
    std::vector<Lz77Factor> factors;
    Bytes literals;
};

/// Stream: VByte(n), VByte(threshold), literal model, then per factor a flag
/// bit: 0 = literal run (gamma(length), bytes via the literal coder),
/// 1 = reference (src via the coder with universe n, gamma(len - threshold + 1)).
Bytes lcpcomp_encode(ByteView text, const std::vector<Lz77Factor>& refs, index_t threshold, const Coder& coder);
LcpcompStream lcpcomp_parse(ByteView body, const Coder& coder);

struct LcpcompDecodeStats {
    std::size_t deferred_refs = 0;     // references not resolvable on first sight
    std::size_t waiting_positions = 0; // positions put on waiting lists
};

/// Restores the text from a parsed stream. Throws DataError if some position
/// cannot be resolved.
class LcpcompDecoder {
public:
    static constexpr const char* kType = "lcpcomp_dec";
    virtual ~LcpcompDecoder() = default;
    virtual Bytes decode(const LcpcompStream& stream, LcpcompDecodeStats* stats = nullptr) const = 0;
};

/// One pass with a waiting list per text position.
class CompactDecoder final : public LcpcompDecoder {
public:
    Bytes decode(const LcpcompStream& stream, LcpcompDecodeStats* stats = nullptr) const override;
};

/// Up to `alpha` rescans of the deferred references, then waiting lists for
/// the positions still missing, addressed by their rank in a bit vector.
class ScansDecoder final : public LcpcompDecoder {
public:
    explicit ScansDecoder(std::size_t alpha) : alpha_(alpha) {}
    Bytes decode(const LcpcompStream& stream, LcpcompDecodeStats* stats = nullptr) const override;

private:
    std::size_t alpha_;
};

class LcpcompCompressor final : public Compressor {
public:
    LcpcompCompressor(std::shared_ptr<Coder> coder, index_t threshold, std::shared_ptr<LcpcompStrategy> strategy,
                      std::shared_ptr<LcpcompDecoder> decoder)
        : coder_(std::move(coder)), threshold_(threshold), strategy_(std::move(strategy)),
          decoder_(std::move(decoder)) {}

    Bytes compress(ByteView input) const override;
    Bytes decompress(ByteView input) const override;

private:
    std::shared_ptr<Coder> coder_;
    index_t threshold_;
    std::shared_ptr<LcpcompStrategy> strategy_;
    std::shared_ptr<LcpcompDecoder> decoder_;
};

} // namespace tdc
