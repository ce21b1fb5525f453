#include <tdc/lz78u/lz78u.hpp>

#include <optional>

#include <tdc/coders/elias.hpp>
#include <tdc/coders/vbyte.hpp>
#include <tdc/core/stats.hpp>
#include <tdc/textds/text.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

namespace {

// Output text with the extent of every decoded factor.
class FactorSink {
public:
    explicit FactorSink(std::size_t n) : n_(n) {
        out_.reserve(n);
        offset_.push_back(0);
        length_.push_back(0);
    }

    std::size_t factors() const { return offset_.size() - 1; }

    void begin_factor(std::uint64_t ref) {
        if(ref > factors()) throw DataError("LZ78U: reference to a later factor");
        start_ = out_.size();
        copy_factor(ref);
    }

    void copy_factor(std::uint64_t y) {
        const std::size_t off = offset_[y], len = length_[y];
        if(len > n_ - out_.size()) throw DataError("LZ78U: factor exceeds text length");
        for(std::size_t k = 0; k < len; ++k) out_.push_back(out_[off + k]);
    }

    void end_factor() {
        offset_.push_back(start_);
        length_.push_back(out_.size() - start_);
    }

    std::size_t length(std::uint64_t y) const { return length_[y]; }
    std::size_t remaining() const { return n_ - out_.size(); }
    Bytes& bytes() { return out_; }

private:
    std::size_t n_;
    Bytes out_;
    std::vector<std::size_t> offset_, length_;
    std::size_t start_ = 0;
};

std::uint64_t read_count(BitReader& in, std::size_t n) {
    const auto z = vbyte_decode(in);
    if(z > n) throw DataError("LZ78U: more factors than text positions");
    return z;
}

std::uint64_t read_label_length(BitReader& in, const FactorSink& sink) {
    const auto len = gamma_decode(in);
    if(len > sink.remaining()) throw DataError("LZ78U: label exceeds text length");
    return len;
}

} // namespace

void Lz78uPlainStrategy::encode(BitWriter& out, const SuffixTree& st, const Lz78uFactorization& f, const Coder& coder,
                                index_t) const {
    const auto text = st.text();
    std::vector<ByteView> labels;
    labels.reserve(f.factors.size());
    for(const auto& x : f.factors) labels.push_back(text.subspan(x.begin, x.len));
    auto lit = string_coder_->literal_encoder(labels);
    vbyte_encode(out, f.factors.size());
    lit->write_model(out);
    for(std::size_t x = 0; x < f.factors.size(); ++x) {
        coder.encode_int(out, f.factors[x].ref, x + 1);
        gamma_encode(out, labels[x].size());
        lit->encode(out, labels[x]);
    }
}

Bytes Lz78uPlainStrategy::decode(BitReader& in, std::size_t n, const Coder& coder) const {
    const auto z = read_count(in, n);
    auto lit = string_coder_->literal_decoder();
    lit->read_model(in);
    FactorSink sink(n);
    for(std::uint64_t x = 1; x <= z; ++x) {
        sink.begin_factor(coder.decode_int(in, x));
        lit->decode(in, read_label_length(in, sink), sink.bytes());
        sink.end_factor();
    }
    return std::move(sink.bytes());
}

void Lz78uBufferingStrategy::encode(BitWriter& out, const SuffixTree& st, const Lz78uFactorization& f,
                                    const Coder& coder, index_t threshold) const {
    const auto text = st.text();
    const auto tokens = lz78u_buffer_labels(st, f, threshold);
    std::vector<ByteView> runs;
    std::size_t refs = 0;
    for(const auto& label : tokens) {
        for(const auto& t : label) {
            if(t.literal) {
                runs.push_back(text.subspan(t.begin, t.len));
            } else {
                ++refs;
            }
        }
    }
    StatPhase::log("label_references", refs);
    auto lit = string_coder_->literal_encoder(runs);
    vbyte_encode(out, f.factors.size());
    lit->write_model(out);
    for(std::size_t x = 0; x < f.factors.size(); ++x) {
        coder.encode_int(out, f.factors[x].ref, x + 1);
        gamma_encode(out, f.factors[x].len);
        for(const auto& t : tokens[x]) {
            if(t.literal) {
                out.write_bit(false);
                gamma_encode(out, t.len);
                lit->encode(out, text.subspan(t.begin, t.len));
            } else {
                out.write_bit(true);
                coder.encode_int(out, t.factor - 1, x);
            }
        }
    }
}

Bytes Lz78uBufferingStrategy::decode(BitReader& in, std::size_t n, const Coder& coder) const {
    const auto z = read_count(in, n);
    auto lit = string_coder_->literal_decoder();
    lit->read_model(in);
    FactorSink sink(n);
    for(std::uint64_t x = 1; x <= z; ++x) {
        sink.begin_factor(coder.decode_int(in, x));
        const auto len = read_label_length(in, sink);
        std::uint64_t done = 0;
        while(done < len) {
            if(!in.read_bit()) {
                const auto run = gamma_decode(in);
                if(run > len - done) throw DataError("LZ78U: literal run exceeds label");
                lit->decode(in, run, sink.bytes());
                done += run;
            } else {
                if(x == 1) throw DataError("LZ78U: first factor cannot refer to a factor");
                const auto y = coder.decode_int(in, x - 1) + 1;
                if(sink.length(y) > len - done) throw DataError("LZ78U: label token exceeds label");
                sink.copy_factor(y);
                done += sink.length(y);
            }
        }
        sink.end_factor();
    }
    return std::move(sink.bytes());
}

Bytes Lz78uCompressor::compress(ByteView input) const {
    const Bytes text = make_text(input);
    TextDS ds(text);
    std::optional<SuffixTree> st;
    {
        StatPhase phase("Construct ST");
        st.emplace(ds);
        phase.log_stat("nodes", st->size());
    }
    Lz78uFactorization f;
    {
        StatPhase phase("Factorize");
        f = lz78u_factorize_stream(*st);
        phase.log_stat("factor_count", f.factors.size());
    }
    StatPhase phase("Encode");
    BitWriter out;
    vbyte_encode(out, text.size());
    strategy_->encode(out, *st, f, *coder_, threshold_);
    return std::move(out).finish();
}

Bytes Lz78uCompressor::decompress(ByteView input) const {
    StatPhase phase("Decode");
    BitReader in(input);
    const auto n = vbyte_decode(in);
    if(n > (std::uint64_t(1) << 32) - 2) throw DataError("LZ78U: text too long");
    Bytes text = strategy_->decode(in, n, *coder_);
    if(text.size() != n) throw DataError("LZ78U: stream ends before the text is complete");
    return strip_sentinel(std::move(text));
}

} // namespace tdc
