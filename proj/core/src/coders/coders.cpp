#include <tdc/coders/coders.hpp>

#include <stdexcept>

#include <tdc/coders/elias.hpp>
#include <tdc/coders/huffman.hpp>
#include <tdc/coders/sle.hpp>
#include <tdc/coders/vbyte.hpp>
#include <tdc/core/registry.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

namespace {

void check_encode(std::uint64_t v, std::uint64_t universe) {
    if(v >= universe) throw std::invalid_argument("coder: value outside universe");
}

std::uint64_t check_decode(std::uint64_t v, std::uint64_t universe) {
    if(v >= universe) throw DataError("coder: decoded value outside universe");
    return v;
}

// Literal coding byte by byte with a fixed integer code and no model.
template<typename EncodeByte, typename DecodeByte>
class BytewiseLiterals {
public:
    class Encoder final : public LiteralEncoder {
    public:
        void write_model(BitWriter&) const override {}
        void encode(BitWriter& out, ByteView run) const override {
            for(auto b : run) EncodeByte{}(out, b);
        }
    };
    class Decoder final : public LiteralDecoder {
    public:
        void read_model(BitReader&) override {}
        void decode(BitReader& in, std::size_t len, Bytes& out) const override {
            for(std::size_t i = 0; i < len; ++i) out.push_back(DecodeByte{}(in));
        }
    };
};

struct RawByteOut {
    void operator()(BitWriter& out, std::uint8_t b) const { out.write_bits(b, 8); }
};
struct RawByteIn {
    std::uint8_t operator()(BitReader& in) const { return static_cast<std::uint8_t>(in.read_bits(8)); }
};
struct GammaByteOut {
    void operator()(BitWriter& out, std::uint8_t b) const { gamma_encode(out, b + 1u); }
};
struct GammaByteIn {
    std::uint8_t operator()(BitReader& in) const {
        const auto v = gamma_decode(in);
        if(v > 256) throw DataError("gamma literal out of byte range");
        return static_cast<std::uint8_t>(v - 1);
    }
};
struct DeltaByteOut {
    void operator()(BitWriter& out, std::uint8_t b) const { delta_encode(out, b + 1u); }
};
struct DeltaByteIn {
    std::uint8_t operator()(BitReader& in) const {
        const auto v = delta_decode(in);
        if(v > 256) throw DataError("delta literal out of byte range");
        return static_cast<std::uint8_t>(v - 1);
    }
};
struct VByteByteOut {
    void operator()(BitWriter& out, std::uint8_t b) const { vbyte_encode(out, b); }
};
struct VByteByteIn {
    std::uint8_t operator()(BitReader& in) const {
        const auto v = vbyte_decode(in);
        if(v > 255) throw DataError("vbyte literal out of byte range");
        return static_cast<std::uint8_t>(v);
    }
};

template<typename Out, typename In>
std::unique_ptr<LiteralEncoder> bytewise_encoder() {
    return std::make_unique<typename BytewiseLiterals<Out, In>::Encoder>();
}
template<typename Out, typename In>
std::unique_ptr<LiteralDecoder> bytewise_decoder() {
    return std::make_unique<typename BytewiseLiterals<Out, In>::Decoder>();
}

class BitCoder final : public Coder {
public:
    void encode_int(BitWriter& out, std::uint64_t v, std::uint64_t universe) const override {
        bit_compact_encode(out, v, universe);
    }
    std::uint64_t decode_int(BitReader& in, std::uint64_t universe) const override {
        return bit_compact_decode(in, universe);
    }
    std::unique_ptr<LiteralEncoder> literal_encoder(std::span<const ByteView>) const override {
        return bytewise_encoder<RawByteOut, RawByteIn>();
    }
    std::unique_ptr<LiteralDecoder> literal_decoder() const override {
        return bytewise_decoder<RawByteOut, RawByteIn>();
    }
};

class GammaCoder final : public Coder {
public:
    void encode_int(BitWriter& out, std::uint64_t v, std::uint64_t universe) const override {
        check_encode(v, universe);
        gamma_encode(out, v + 1);
    }
    std::uint64_t decode_int(BitReader& in, std::uint64_t universe) const override {
        return check_decode(gamma_decode(in) - 1, universe);
    }
    std::unique_ptr<LiteralEncoder> literal_encoder(std::span<const ByteView>) const override {
        return bytewise_encoder<GammaByteOut, GammaByteIn>();
    }
    std::unique_ptr<LiteralDecoder> literal_decoder() const override {
        return bytewise_decoder<GammaByteOut, GammaByteIn>();
    }
};

class DeltaCoder final : public Coder {
public:
    void encode_int(BitWriter& out, std::uint64_t v, std::uint64_t universe) const override {
        check_encode(v, universe);
        delta_encode(out, v + 1);
    }
    std::uint64_t decode_int(BitReader& in, std::uint64_t universe) const override {
        return check_decode(delta_decode(in) - 1, universe);
    }
    std::unique_ptr<LiteralEncoder> literal_encoder(std::span<const ByteView>) const override {
        return bytewise_encoder<DeltaByteOut, DeltaByteIn>();
    }
    std::unique_ptr<LiteralDecoder> literal_decoder() const override {
        return bytewise_decoder<DeltaByteOut, DeltaByteIn>();
    }
};

class VByteCoder final : public Coder {
public:
    void encode_int(BitWriter& out, std::uint64_t v, std::uint64_t universe) const override {
        check_encode(v, universe);
        vbyte_encode(out, v);
    }
    std::uint64_t decode_int(BitReader& in, std::uint64_t universe) const override {
        return check_decode(vbyte_decode(in), universe);
    }
    std::unique_ptr<LiteralEncoder> literal_encoder(std::span<const ByteView>) const override {
        return bytewise_encoder<VByteByteOut, VByteByteIn>();
    }
    std::unique_ptr<LiteralDecoder> literal_decoder() const override {
        return bytewise_decoder<VByteByteOut, VByteByteIn>();
    }
};

class HuffmanLiteralEncoder final : public LiteralEncoder {
public:
    explicit HuffmanLiteralEncoder(std::span<const ByteView> runs) {
        std::vector<std::uint64_t> freq(256, 0);
        for(const auto run : runs) {
            for(auto b : run) ++freq[b];
        }
        code_ = CanonicalCode::from_frequencies(freq);
    }
    void write_model(BitWriter& out) const override { code_.write(out); }
    void encode(BitWriter& out, ByteView run) const override {
        for(auto b : run) code_.encode(out, b);
    }

private:
    CanonicalCode code_;
};

class HuffmanLiteralDecoder final : public LiteralDecoder {
public:
    void read_model(BitReader& in) override {
        code_ = CanonicalCode::read(in);
        if(code_.lengths().size() > 256) throw DataError("Huffman literal model: symbol out of byte range");
    }
    void decode(BitReader& in, std::size_t len, Bytes& out) const override {
        for(std::size_t i = 0; i < len; ++i) out.push_back(static_cast<std::uint8_t>(code_.decode(in)));
    }

private:
    CanonicalCode code_;
};

class SleLiteralEncoder final : public LiteralEncoder {
public:
    explicit SleLiteralEncoder(std::span<const ByteView> runs) : model_(runs) {}
    void write_model(BitWriter& out) const override { model_.write(out); }
    void encode(BitWriter& out, ByteView run) const override { model_.encode(out, run); }

private:
    SleModel model_;
};

class SleLiteralDecoder final : public LiteralDecoder {
public:
    void read_model(BitReader& in) override { model_ = SleModel::read(in); }
    void decode(BitReader& in, std::size_t len, Bytes& out) const override { model_.decode(in, len, out); }

private:
    SleModel model_;
};

class HuffmanCoder final : public Coder {
public:
    void encode_int(BitWriter& out, std::uint64_t v, std::uint64_t universe) const override {
        bit_compact_encode(out, v, universe);
    }
    std::uint64_t decode_int(BitReader& in, std::uint64_t universe) const override {
        return bit_compact_decode(in, universe);
    }
    std::unique_ptr<LiteralEncoder> literal_encoder(std::span<const ByteView> runs) const override {
        return std::make_unique<HuffmanLiteralEncoder>(runs);
    }
    std::unique_ptr<LiteralDecoder> literal_decoder() const override {
        return std::make_unique<HuffmanLiteralDecoder>();
    }
};

class SleCoder final : public Coder {
public:
    void encode_int(BitWriter& out, std::uint64_t v, std::uint64_t universe) const override {
        bit_compact_encode(out, v, universe);
    }
    std::uint64_t decode_int(BitReader& in, std::uint64_t universe) const override {
        return bit_compact_decode(in, universe);
    }
    std::unique_ptr<LiteralEncoder> literal_encoder(std::span<const ByteView> runs) const override {
        return std::make_unique<SleLiteralEncoder>(runs);
    }
    std::unique_ptr<LiteralDecoder> literal_decoder() const override {
        return std::make_unique<SleLiteralDecoder>();
    }
};

} // namespace

std::shared_ptr<Coder> make_bit_coder() { return std::make_shared<BitCoder>(); }
std::shared_ptr<Coder> make_gamma_coder() { return std::make_shared<GammaCoder>(); }
std::shared_ptr<Coder> make_delta_coder() { return std::make_shared<DeltaCoder>(); }
std::shared_ptr<Coder> make_vbyte_coder() { return std::make_shared<VByteCoder>(); }
std::shared_ptr<Coder> make_huffman_coder() { return std::make_shared<HuffmanCoder>(); }
std::shared_ptr<Coder> make_sle_coder() { return std::make_shared<SleCoder>(); }

void register_coders(Registry& registry) {
    auto add = [&](const char* id, const char* desc, std::shared_ptr<Coder> (*make)()) {
        registry.add<Coder>(Meta("coder", id, desc), [make](const Config&) { return make(); });
    };
    add("bit", "Bit-compact integers, 8-bit literals", make_bit_coder);
    add("gamma", "Elias-gamma integers and literals", make_gamma_coder);
    add("delta", "Elias-delta integers and literals", make_delta_coder);
    add("vbyte", "VByte integers and literals", make_vbyte_coder);
    add("huff", "Bit-compact integers, canonical Huffman literals", make_huffman_coder);
    add("sle", "Bit-compact integers, static low-entropy literals (bytes and 3-grams)", make_sle_coder);
}

} // namespace tdc
