#include <tdc/lcpcomp/lcpcomp.hpp>

#include <algorithm>
#include <stdexcept>

#include <tdc/lcpcomp/array_max_heap.hpp>

namespace tdc {

namespace {

struct Arrays {
    std::vector<index_t> sa, isa, lcp;
};

Arrays load(TextDS& ds) {
    ds.require(TextDS::SA | TextDS::ISA | TextDS::LCP);
    return {ds.require_sa().to_vector(), ds.require_isa().to_vector(), ds.require_lcp().to_vector()};
}

void check_threshold(index_t threshold) {
    if(threshold == 0) throw std::invalid_argument("lcpcomp: threshold must be >= 1");
}

void sort_by_position(std::vector<Lz77Factor>& refs) {
    std::sort(refs.begin(), refs.end(), [](const Lz77Factor& a, const Lz77Factor& b) { return a.pos < b.pos; });
}

} // namespace

std::vector<Lz77Factor> LcpcompHeapStrategy::factorize(TextDS& ds, index_t threshold,
                                                       LcpcompFactorizeStats* stats) const {
    check_threshold(threshold);
    auto [sa, isa, lcp] = load(ds);
    const index_t t = threshold;

    ArrayMaxHeap heap(lcp, &sa);
    for(index_t i = 1; i < lcp.size(); ++i) {
        if(lcp[i] >= t) heap.insert(i);
    }

    std::vector<Lz77Factor> refs;
    while(!heap.empty()) {
        const index_t m = heap.top();
        const index_t fpos = sa[m], fsrc = sa[m - 1], flen = heap.key(m);
        refs.push_back({fpos, flen, fsrc, false});
        for(index_t k = 0; k < flen; ++k) heap.remove(isa[fpos + k]);
        for(index_t k = 0; k < flen && fpos > k; ++k) {
            const index_t s = fpos - k - 1;
            const index_t i = isa[s];
            if(heap.contains(i) && s + lcp[i] > fpos) {
                const index_t l = fpos - s;
                if(l >= t) {
                    heap.decrease_key(i, l);
                } else {
                    heap.remove(i);
                }
            }
        }
    }
    if(stats) {
        stats->decrease_count = heap.decrease_count();
        stats->double_decrease_count = heap.double_decrease_count();
    }
    sort_by_position(refs);
    return refs;
}

std::vector<Lz77Factor> LcpcompArraysStrategy::factorize(TextDS& ds, index_t threshold,
                                                         LcpcompFactorizeStats* stats) const {
    return factorize(ds, threshold, stats, {});
}

std::vector<Lz77Factor> LcpcompArraysStrategy::factorize(TextDS& ds, index_t threshold,
                                                         LcpcompFactorizeStats* stats,
                                                         const LcpObserver& observer) const {
    check_threshold(threshold);
    auto [sa, isa, lcp] = load(ds);
    const index_t t = threshold;
    const std::size_t n = sa.size();
    const index_t max_lcp = lcp.empty() ? 0 : *std::max_element(lcp.begin(), lcp.end());

    std::vector<Lz77Factor> refs;
    if(max_lcp < t) return refs;

    // bucket l holds the SA indices with LCP value l, by descending text position
    std::vector<std::vector<index_t>> buckets(max_lcp + 1);
    for(std::size_t p = n; p-- > 0;) {
        const index_t j = isa[p];
        if(lcp[j] >= t) buckets[lcp[j]].push_back(j);
    }
    std::vector<std::size_t> initial(max_lcp + 1);
    for(index_t l = t; l <= max_lcp; ++l) initial[l] = buckets[l].size();

    std::vector<std::uint8_t> decreased(n, 0);
    LcpcompFactorizeStats local;
    auto by_position_desc = [&](index_t a, index_t b) { return sa[a] > sa[b]; };

    for(index_t l = max_lcp; l >= t; --l) {
        auto& bucket = buckets[l];
        // entries delayed into this bucket are merged into position order
        const auto mid = bucket.begin() + static_cast<std::ptrdiff_t>(initial[l]);
        std::sort(mid, bucket.end(), by_position_desc);
        std::inplace_merge(bucket.begin(), mid, bucket.end(), by_position_desc);

        for(const index_t j : bucket) {
            if(lcp[j] != l) {
                if(lcp[j] >= t) {
                    buckets[lcp[j]].push_back(j);
                    ++local.delayed_count;
                }
                continue;
            }
            const index_t fpos = sa[j], fsrc = sa[j - 1], flen = l;
            refs.push_back({fpos, flen, fsrc, false});
            for(index_t k = 0; k < flen; ++k) lcp[isa[fpos + k]] = 0;
            for(index_t k = 0; k < flen && fpos > k; ++k) {
                const index_t s = fpos - k - 1;
                const index_t i = isa[s];
                if(lcp[i] >= t && s + lcp[i] > fpos) {
                    lcp[i] = fpos - s;
                    ++local.decrease_count;
                    if(decreased[i]++ > 0) ++local.double_decrease_count;
                }
            }
            if(observer) observer(lcp);
        }
        std::vector<index_t>().swap(bucket);
        if(l == 0) break;
    }
    if(stats) *stats = local;
    sort_by_position(refs);
    return refs;
}

std::vector<Lz77Factor> with_literal_runs(std::size_t n, const std::vector<Lz77Factor>& refs) {
    std::vector<Lz77Factor> out;
    out.reserve(2 * refs.size() + 1);
    std::size_t pos = 0;
    for(const auto& r : refs) {
        if(r.pos > pos) out.push_back({static_cast<index_t>(pos), static_cast<index_t>(r.pos - pos), 0, true});
        out.push_back(r);
        pos = r.pos + r.len;
    }
    if(pos < n) out.push_back({static_cast<index_t>(pos), static_cast<index_t>(n - pos), 0, true});
    return out;
}

} // namespace tdc
