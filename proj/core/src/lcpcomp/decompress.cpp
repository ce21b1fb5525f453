#include <tdc/lcpcomp/lcpcomp.hpp>

#include <limits>

#include <tdc/succinct/bit_vector.hpp>
#include <tdc/util/error.hpp>

namespace tdc {

namespace {

constexpr index_t kNone = std::numeric_limits<index_t>::max();

// Waiting lists as singly linked lists: head[key] is the first waiting
// position, next[slot(t)] the one after t.
struct WaitingLists {
    std::vector<index_t> head, next;
    explicit WaitingLists(std::size_t keys, std::size_t slots) : head(keys, kNone), next(slots, kNone) {}
};

class Restorer {
public:
    explicit Restorer(std::size_t n) : text_(n), done_(n) {}

    bool done(std::size_t p) const { return done_[p]; }

    void write(index_t p, std::uint8_t c) {
        text_[p] = c;
        done_.set(p);
    }

    Bytes finish() {
        for(std::size_t p = 0; p < text_.size(); ++p) {
            if(!done_[p]) throw DataError("lcpcomp: text position " + std::to_string(p) + " is never resolved");
        }
        return std::move(text_);
    }

    std::uint8_t at(std::size_t p) const { return text_[p]; }
    BitVector& done_bits() { return done_; }

private:
    Bytes text_;
    BitVector done_;
};

} // namespace

Bytes CompactDecoder::decode(const LcpcompStream& s, LcpcompDecodeStats* stats) const {
    const std::size_t n = s.n;
    Restorer r(n);
    WaitingLists lists(n, n);
    std::vector<index_t> stack;
    LcpcompDecodeStats local;

    auto resolve = [&](index_t p) {
        stack.push_back(p);
        while(!stack.empty()) {
            const index_t q = stack.back();
            stack.pop_back();
            for(index_t t = lists.head[q]; t != kNone; t = lists.next[t]) {
                r.write(t, r.at(q));
                stack.push_back(t);
            }
            lists.head[q] = kNone;
        }
    };

    std::size_t lit = 0;
    for(const auto& f : s.factors) {
        if(f.literal) {
            for(index_t k = 0; k < f.len; ++k) {
                r.write(f.pos + k, s.literals[lit++]);
                resolve(f.pos + k);
            }
            continue;
        }
        bool deferred = false;
        for(index_t k = 0; k < f.len; ++k) {
            const index_t t = f.pos + k, src = f.src + k;
            if(r.done(src)) {
                r.write(t, r.at(src));
                resolve(t);
            } else {
                lists.next[t] = lists.head[src];
                lists.head[src] = t;
                ++local.waiting_positions;
                deferred = true;
            }
        }
        if(deferred) ++local.deferred_refs;
    }
    if(stats) *stats = local;
    return r.finish();
}

Bytes ScansDecoder::decode(const LcpcompStream& s, LcpcompDecodeStats* stats) const {
    const std::size_t n = s.n;
    Restorer r(n);
    LcpcompDecodeStats local;

    // pass 0: literals and whatever references can be copied right away
    std::vector<std::size_t> pending;
    std::size_t lit = 0;
    for(std::size_t x = 0; x < s.factors.size(); ++x) {
        const auto& f = s.factors[x];
        if(f.literal) {
            for(index_t k = 0; k < f.len; ++k) r.write(f.pos + k, s.literals[lit++]);
            continue;
        }
        bool complete = true;
        for(index_t k = 0; k < f.len; ++k) {
            if(r.done(f.src + k)) {
                r.write(f.pos + k, r.at(f.src + k));
            } else {
                complete = false;
            }
        }
        if(!complete) pending.push_back(x);
    }
    local.deferred_refs = pending.size();

    auto try_copy = [&](const Lz77Factor& f) {
        bool complete = true;
        for(index_t k = 0; k < f.len; ++k) {
            if(r.done(f.pos + k)) continue;
            if(r.done(f.src + k)) {
                r.write(f.pos + k, r.at(f.src + k));
            } else {
                complete = false;
            }
        }
        return complete;
    };

    for(std::size_t round = 0; round < alpha_ && !pending.empty(); ++round) {
        std::vector<std::size_t> rest;
        for(auto x : pending) {
            if(!try_copy(s.factors[x])) rest.push_back(x);
        }
        pending.swap(rest);
    }

    if(!pending.empty()) {
        // waiting lists only for the positions still missing
        BitVector missing(n);
        for(std::size_t p = 0; p < n; ++p) {
            if(!r.done(p)) missing.set(p);
        }
        RankSelect rank(missing);
        WaitingLists lists(rank.ones(), rank.ones());
        std::vector<index_t> stack;

        auto resolve = [&](index_t p) {
            stack.push_back(p);
            while(!stack.empty()) {
                const index_t q = stack.back();
                stack.pop_back();
                if(!missing[q]) continue;
                const auto rq = rank.rank1(q);
                for(index_t t = lists.head[rq]; t != kNone; t = lists.next[rank.rank1(t)]) {
                    r.write(t, r.at(q));
                    stack.push_back(t);
                }
                lists.head[rq] = kNone;
            }
        };

        for(auto x : pending) {
            const auto& f = s.factors[x];
            for(index_t k = 0; k < f.len; ++k) {
                const index_t t = f.pos + k, src = f.src + k;
                if(r.done(t)) continue;
                if(r.done(src)) {
                    r.write(t, r.at(src));
                    resolve(t);
                } else {
                    const auto rs = rank.rank1(src);
                    lists.next[rank.rank1(t)] = lists.head[rs];
                    lists.head[rs] = t;
                    ++local.waiting_positions;
                }
            }
        }
    }
    if(stats) *stats = local;
    return r.finish();
}

} // namespace tdc
