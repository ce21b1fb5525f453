#include <tdc/textds/textds.hpp>
#include <tdc/textds/text.hpp>
#include <tdc/textds/construct.hpp>

#include <algorithm>

#include <tdc/core/stats.hpp>
#include <tdc/util/bits.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

Bytes make_text(ByteView input) {
    if(std::find(input.begin(), input.end(), kSentinel) != input.end()) {
        throw DataError("input contains the reserved sentinel byte 0x00");
    }
    Bytes text;
    text.reserve(input.size() + 1);
    text.assign(input.begin(), input.end());
    text.push_back(kSentinel);
    return text;
}

Bytes strip_sentinel(Bytes text) {
    if(text.empty() || text.back() != kSentinel) {
        throw DataError("decoded text lacks the trailing sentinel");
    }
    text.pop_back();
    return text;
}

void IntArray::pack(unsigned width) {
    if(is_packed()) return;
    const auto& v = plain();
    PackedIntArray p(v.size(), width);
    for(std::size_t i = 0; i < v.size(); ++i) p.set(i, v[i]);
    data_ = std::move(p);
}

std::vector<index_t> IntArray::to_vector() const {
    if(!is_packed()) return plain();
    const auto& p = packed();
    std::vector<index_t> v(p.size());
    for(std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<index_t>(p.get(i));
    return v;
}

std::size_t IntArray::bytes() const {
    if(is_packed()) return packed().bytes();
    return plain().size() * sizeof(index_t);
}

TextDS::TextDS(ByteView text, DSMode mode) : text_(text), mode_(mode) {
    if(text.empty() || text.back() != kSentinel) {
        throw DataError("TextDS: text must be terminated by the 0x00 sentinel");
    }
}

bool TextDS::has(Flags f) const {
    switch(f) {
        case SA: return sa_.has_value();
        case ISA: return isa_.has_value();
        case LCP: return lcp_.has_value();
        case BWT: return bwt_.has_value();
    }
    return false;
}

unsigned TextDS::packed_width() const {
    return std::max(1u, ceil_log2(text_.size()));
}

void TextDS::maybe_pack(std::optional<IntArray>& arr, bool dependents_pending) {
    if(!arr) return;
    switch(mode_) {
        case DSMode::plain: return;
        case DSMode::compressed: arr->pack(packed_width()); return;
        case DSMode::delayed:
            if(!dependents_pending) arr->pack(packed_width());
            return;
    }
}

void TextDS::require(unsigned flags) {
    // static dependency graph: SA -> {ISA, LCP, BWT}
    const bool want_isa = (flags & ISA) && !isa_;
    const bool want_lcp = (flags & LCP) && !lcp_;
    const bool want_bwt = (flags & BWT) && !bwt_;
    const bool want_sa = (flags & SA) || want_isa || want_lcp || want_bwt;

    if(want_sa && !sa_) {
        StatPhase phase("Construct SA");
        sa_.emplace(build_sa(text_));
        // the compressed mode never keeps a plain SA around
        if(mode_ == DSMode::compressed) maybe_pack(sa_, false);
        phase.log_stat("size", sa_->bytes());
    }

    // dependents read from the plain SA while it is still plain (delayed mode)
    auto sa_plain = [&]() -> std::vector<index_t> {
        if(sa_->is_packed()) return sa_->to_vector();
        return {};
    };
    std::vector<index_t> sa_copy;
    auto sa_span = [&]() -> std::span<const index_t> {
        if(!sa_->is_packed()) return sa_->plain();
        if(sa_copy.empty()) sa_copy = sa_plain();
        return sa_copy;
    };

    if(want_lcp) {
        StatPhase phase("Construct LCP");
        lcp_.emplace(build_lcp_phi(text_, sa_span()));
        maybe_pack(lcp_, false);
        phase.log_stat("size", lcp_->bytes());
    }
    if(want_isa) {
        StatPhase phase("Construct ISA");
        isa_.emplace(build_isa(sa_span()));
        maybe_pack(isa_, false);
        phase.log_stat("size", isa_->bytes());
    }
    if(want_bwt) {
        StatPhase phase("Construct BWT");
        bwt_.emplace(build_bwt(text_, sa_span()));
    }
    sa_copy.clear();
    sa_copy.shrink_to_fit();

    if(sa_ && !sa_->is_packed() && mode_ == DSMode::delayed) {
        StatPhase phase("Compress SA");
        maybe_pack(sa_, false);
        phase.log_stat("size", sa_->bytes());
    }
}

} // namespace tdc
