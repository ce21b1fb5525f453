#include <tdc/lcpcomp/lcpcomp.hpp>

#include <tdc/core/stats.hpp>
#include <tdc/textds/text.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

Bytes LcpcompCompressor::compress(ByteView input) const {
    const Bytes text = make_text(input);
    TextDS ds(text);
    std::vector<Lz77Factor> refs;
    {
        StatPhase phase("Factorize");
        LcpcompFactorizeStats stats;
        refs = strategy_->factorize(ds, threshold_, &stats);
        phase.log_stat("factor_count", refs.size());
        phase.log_stat("decrease_key", stats.decrease_count);
        phase.log_stat("double_decrease_key", stats.double_decrease_count);
        phase.log_stat("delayed", stats.delayed_count);
    }
    StatPhase phase("Encode");
    return lcpcomp_encode(text, refs, threshold_, *coder_);
}

Bytes LcpcompCompressor::decompress(ByteView input) const {
    LcpcompStream stream;
    {
        StatPhase phase("Parse");
        stream = lcpcomp_parse(input, *coder_);
    }
    StatPhase phase("Restore");
    LcpcompDecodeStats stats;
    Bytes text = decoder_->decode(stream, &stats);
    phase.log_stat("deferred_refs", stats.deferred_refs);
    phase.log_stat("waiting_positions", stats.waiting_positions);
    return strip_sentinel(std::move(text));
}

} // namespace tdc
