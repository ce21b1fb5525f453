#include <tdc/core/builtin.hpp>

#include <limits>

#include <tdc/classic/bwt.hpp>
#include <tdc/classic/encode.hpp>
#include <tdc/classic/lz78.hpp>
#include <tdc/classic/lzss_lcp.hpp>
#include <tdc/classic/lzw.hpp>
#include <tdc/classic/mtf.hpp>
#include <tdc/classic/rle.hpp>
#include <tdc/coders/coders.hpp>
#include <tdc/core/header.hpp>
#include <tdc/core/stats.hpp>
#include <tdc/gen/generators.hpp>
#include <tdc/lcpcomp/lcpcomp.hpp>
#include <tdc/lz78u/lz78u.hpp>

namespace tdc {

namespace {

constexpr const char* kCompressor = Compressor::kType;
constexpr const char* kCoder = Coder::kType;

index_t threshold_of(const Config& c) {
    const auto t = c.get_int("threshold");
    if(t < 1 || t > std::numeric_limits<index_t>::max()) {
        throw SpecError(c.meta().id() + ": threshold must be >= 1");
    }
    return static_cast<index_t>(t);
}

std::int64_t non_negative(const Config& c, std::string_view name) {
    const auto v = c.get_int(name);
    if(v < 0) throw SpecError(c.meta().id() + ": " + std::string(name) + " must be >= 0");
    return v;
}

unsigned word_index(const Config& c) {
    const auto k = c.get_int("n");
    if(k < 1 || k > 64) throw SpecError(c.meta().id() + ": n must be in [1, 64]");
    return static_cast<unsigned>(k);
}

class FunctionGenerator final : public Generator {
public:
    explicit FunctionGenerator(std::function<Bytes()> f) : f_(std::move(f)) {}
    Bytes generate() const override { return f_(); }

private:
    std::function<Bytes()> f_;
};

std::shared_ptr<Generator> make_generator(std::function<Bytes()> f) {
    return std::make_shared<FunctionGenerator>(std::move(f));
}

void register_compressors(Registry& r) {
    r.add<Compressor>(Meta(kCompressor, "bwt", "Burrows-Wheeler transform (sentinel appended)"),
                      [](const Config&) { return std::make_shared<BwtCompressor>(); });
    r.add<Compressor>(Meta(kCompressor, "rle", "run-length encoding of byte runs"),
                      [](const Config&) { return std::make_shared<RleCompressor>(); });
    r.add<Compressor>(Meta(kCompressor, "mtf", "move-to-front transform"),
                      [](const Config&) { return std::make_shared<MtfCompressor>(); });
    r.add<Compressor>(Meta(kCompressor, "encode", "codes the input as one literal run").param_algorithm(
                          "coder", kCoder, "huff"),
                      [](const Config& c) { return std::make_shared<EncodeCompressor>(c.create<Coder>("coder")); });
    r.add<Compressor>(Meta(kCompressor, "lz78", "LZ78 factorization").param_algorithm("coder", kCoder, "bit"),
                      [](const Config& c) { return std::make_shared<Lz78Compressor>(c.create<Coder>("coder")); });
    r.add<Compressor>(Meta(kCompressor, "lzw", "LZW factorization").param_algorithm("coder", kCoder, "bit"),
                      [](const Config& c) { return std::make_shared<LzwCompressor>(c.create<Coder>("coder")); });
    r.add<Compressor>(Meta(kCompressor, "lzss_lcp", "LZ77 factorization from SA and LCP")
                          .param_int("threshold", 5, "t")
                          .param_algorithm("coder", kCoder, "bit"),
                      [](const Config& c) {
                          return std::make_shared<LzssLcpCompressor>(threshold_of(c), c.create<Coder>("coder"));
                      });
    r.add<Compressor>(Meta(kCompressor, "lcpcomp", "greedy longest-repeat substitution")
                          .param_algorithm("coder", kCoder, "sle")
                          .param_int("threshold", 5, "t")
                          .param_algorithm("comp", LcpcompStrategy::kType, "heap")
                          .param_algorithm("dec", LcpcompDecoder::kType, "compact"),
                      [](const Config& c) {
                          return std::make_shared<LcpcompCompressor>(c.create<Coder>("coder"), threshold_of(c),
                                                                     c.create<LcpcompStrategy>("comp"),
                                                                     c.create<LcpcompDecoder>("dec"));
                      });
    r.add<Compressor>(Meta(kCompressor, "lz78u", "LZ78 along unary suffix tree paths")
                          .param_algorithm("coder", kCoder, "bit")
                          .param_algorithm("comp", Lz78uStrategy::kType, "buffering")
                          .param_int("threshold", 3, "t"),
                      [](const Config& c) {
                          return std::make_shared<Lz78uCompressor>(c.create<Coder>("coder"),
                                                                   c.create<Lz78uStrategy>("comp"), threshold_of(c));
                      });

    r.add<LcpcompStrategy>(Meta(LcpcompStrategy::kType, "heap", "max-heap over LCP values"),
                           [](const Config&) { return std::make_shared<LcpcompHeapStrategy>(); });
    r.add<LcpcompStrategy>(Meta(LcpcompStrategy::kType, "arrays", "LCP buckets with delayed decreases"),
                           [](const Config&) { return std::make_shared<LcpcompArraysStrategy>(); });
    r.add<LcpcompDecoder>(Meta(LcpcompDecoder::kType, "compact", "waiting list per position"),
                          [](const Config&) { return std::make_shared<CompactDecoder>(); });
    r.add<LcpcompDecoder>(Meta(LcpcompDecoder::kType, "scans", "rescans, then waiting lists").param_int("alpha", 25,
                                                                                                         "a"),
                          [](const Config& c) {
                              return std::make_shared<ScansDecoder>(static_cast<std::size_t>(non_negative(c, "alpha")));
                          });

    r.add<Lz78uStrategy>(Meta(Lz78uStrategy::kType, "plain", "labels coded as strings")
                             .param_algorithm("string_coder", kCoder, "bit"),
                         [](const Config& c) {
                             return std::make_shared<Lz78uPlainStrategy>(c.create<Coder>("string_coder"));
                         });
    r.add<Lz78uStrategy>(Meta(Lz78uStrategy::kType, "buffering", "labels refer to earlier factors")
                             .param_algorithm("string_coder", kCoder, "huff"),
                         [](const Config& c) {
                             return std::make_shared<Lz78uBufferingStrategy>(c.create<Coder>("string_coder"));
                         });

    r.add_alias(kCompressor, "bwtzip", "bwt:rle:mtf:encode(huff)");
    r.add_alias(kCompressor, "huff", "encode(huff)");
}

void register_generators(Registry& r) {
    constexpr const char* kGen = Generator::kType;
    r.add<Generator>(Meta(kGen, "fib", "Fibonacci word F_n").param_int("n"), [](const Config& c) {
        const unsigned k = word_index(c);
        return make_generator([k] { return fibonacci_word(k); });
    });
    r.add<Generator>(Meta(kGen, "thue_morse", "Thue-Morse prefix of length 2^(n-1)").param_int("n"),
                     [](const Config& c) {
                         const unsigned k = word_index(c);
                         return make_generator([k] { return thue_morse_word(k); });
                     });
    r.add<Generator>(Meta(kGen, "run_rich", "binary run-rich word").param_int("n"), [](const Config& c) {
        const unsigned k = word_index(c);
        return make_generator([k] { return run_rich_word(k); });
    });
    r.add<Generator>(Meta(kGen, "random", "uniform random text").param_int("n").param_int("seed", 1).param_int(
                         "sigma", 255),
                     [](const Config& c) {
                         const auto n = static_cast<std::size_t>(non_negative(c, "n"));
                         const auto seed = static_cast<std::uint64_t>(c.get_int("seed"));
                         const auto sigma = c.get_int("sigma");
                         if(sigma < 1 || sigma > 255) throw SpecError("random: sigma must be in [1, 255]");
                         return make_generator(
                             [=] { return random_text(n, seed, static_cast<unsigned>(sigma)); });
                     });
    r.add<Generator>(Meta(kGen, "repetitive", "copies of earlier substrings with mutations").param_int("n").param_int(
                         "seed", 1),
                     [](const Config& c) {
                         const auto n = static_cast<std::size_t>(non_negative(c, "n"));
                         const auto seed = static_cast<std::uint64_t>(c.get_int("seed"));
                         return make_generator([=] { return repetitive_text(n, seed); });
                     });
}

AlgorithmSpec single_stage(const AlgorithmSpec& spec) {
    AlgorithmSpec s;
    s.name = spec.name;
    s.args = spec.args;
    return s;
}

AlgorithmSpec merge_stage(const AlgorithmSpec& header, const AlgorithmSpec& over, const Registry& registry) {
    const Meta* meta = registry.find(kCompressor, over.name);
    if(!meta || header.name != over.name) return single_stage(over);
    const auto& params = meta->params();
    std::vector<bool> taken(params.size(), false);
    AlgorithmSpec out;
    out.name = over.name;
    for(const auto& arg : over.args) {
        if(!arg.key) continue;
        const ParamDecl* p = meta->find_param(*arg.key);
        if(!p) throw SpecError(meta->id() + ": unknown parameter '" + *arg.key + "'");
        taken[static_cast<std::size_t>(p - params.data())] = true;
        out.args.push_back(Arg{p->name, arg.value});
    }
    for(const auto& arg : over.args) {
        if(arg.key) continue;
        std::optional<std::size_t> target;
        for(std::size_t i = 0; i < params.size() && !target; ++i) {
            if(taken[i]) continue;
            const auto& p = params[i];
            if(std::holds_alternative<std::int64_t>(arg.value)) {
                if(p.kind == ParamKind::integer) target = i;
            } else if(std::holds_alternative<QuotedString>(arg.value)) {
                if(p.kind == ParamKind::string) target = i;
            } else if(p.kind == ParamKind::algorithm &&
                      registry.accepts(p.type, std::get<SpecBox>(arg.value)->name)) {
                target = i;
            }
        }
        if(!target) return single_stage(over); // let resolve report the problem
        taken[*target] = true;
        out.args.push_back(Arg{params[*target].name, arg.value});
    }
    for(const auto& arg : header.args) {
        if(!arg.key) continue;
        const ParamDecl* p = meta->find_param(*arg.key);
        if(p && !taken[static_cast<std::size_t>(p - params.data())]) out.args.push_back(arg);
    }
    return out;
}

} // namespace

void register_builtins(Registry& registry) {
    register_coders(registry);
    register_compressors(registry);
    register_generators(registry);
}

const Registry& default_registry() {
    static const Registry registry = [] {
        Registry r;
        register_builtins(r);
        return r;
    }();
    return registry;
}

std::shared_ptr<Compressor> instantiate(const AlgorithmSpec& resolved, const Registry& registry) {
    if(!resolved.next) return registry.create<Compressor>(resolved);
    std::vector<std::shared_ptr<Compressor>> stages;
    for(const AlgorithmSpec* s = &resolved; s; s = s->next ? &*s->next : nullptr) {
        stages.push_back(registry.create<Compressor>(single_stage(*s)));
    }
    return std::make_shared<Pipeline>(std::move(stages));
}

std::shared_ptr<Compressor> make_compressor(std::string_view spec_text, const Registry& registry) {
    return instantiate(registry.resolve(parse_spec(spec_text), kCompressor), registry);
}

Bytes generate(std::string_view spec_text, const Registry& registry) {
    const auto spec = parse_spec(spec_text);
    if(spec.next) throw SpecError("generators cannot be chained");
    const auto resolved = registry.resolve(spec, Generator::kType);
    return registry.create<Generator>(resolved)->generate();
}

Bytes compress_with_header(const AlgorithmSpec& spec, ByteView input, const Registry& registry) {
    const auto resolved = registry.resolve(spec, kCompressor);
    auto compressor = instantiate(resolved, registry);
    Bytes out;
    write_header(resolved, out);
    const Bytes body = compressor->compress(input);
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

Bytes compress_with_header(std::string_view spec_text, ByteView input, const Registry& registry) {
    return compress_with_header(parse_spec(spec_text), input, registry);
}

AlgorithmSpec merge_override(const AlgorithmSpec& header, const AlgorithmSpec& override_spec,
                             const Registry& registry) {
    if(header.stages() != override_spec.stages()) return override_spec;
    for(auto h = &header, o = &override_spec; h; h = h->next ? &*h->next : nullptr, o = o->next ? &*o->next : nullptr) {
        if(h->name != o->name) return override_spec;
    }
    std::vector<AlgorithmSpec> stages;
    for(auto h = &header, o = &override_spec; h; h = h->next ? &*h->next : nullptr, o = o->next ? &*o->next : nullptr) {
        stages.push_back(merge_stage(*h, *o, registry));
    }
    AlgorithmSpec out = std::move(stages.back());
    for(std::size_t i = stages.size() - 1; i-- > 0;) {
        stages[i].next = SpecBox(std::move(out));
        out = std::move(stages[i]);
    }
    return out;
}

Bytes decompress_with_header(ByteView data, const std::optional<AlgorithmSpec>& override_spec,
                             const Registry& registry) {
    const Header header = read_header(data);
    AlgorithmSpec spec = override_spec ? merge_override(header.spec, *override_spec, registry) : header.spec;
    std::shared_ptr<Compressor> compressor;
    try {
        compressor = instantiate(registry.resolve(spec, kCompressor), registry);
    } catch(const SpecError& e) {
        if(override_spec) throw;
        throw DataError(std::string("header names an invalid spec: ") + e.what());
    }
    return compressor->decompress(data.subspan(header.body_offset));
}

} // namespace tdc
