#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include <tdc/util/bytes.hpp>

namespace tdc {

/// Max-heap over values 0..capacity-1 keyed by an external key array.
///
/// Values are ordered by (keys[v], tiebreak[v]); without a tie-break array
/// the value itself breaks ties. decrease_key writes through to the key
/// array. A position index gives O(1) containment tests.
class ArrayMaxHeap {
public:
    static constexpr index_t kAbsent = std::numeric_limits<index_t>::max();

    ArrayMaxHeap(std::vector<index_t>& keys, const std::vector<index_t>* tiebreak = nullptr)
        : keys_(&keys), tiebreak_(tiebreak), pos_(keys.size(), kAbsent) {}

    std::size_t size() const { return heap_.size(); }
    bool empty() const { return heap_.empty(); }
    bool contains(index_t v) const { return pos_[v] != kAbsent; }

    index_t top() const { return heap_.front(); }
    index_t key(index_t v) const { return (*keys_)[v]; }

    void insert(index_t v) {
        if(contains(v)) return;
        pos_[v] = static_cast<index_t>(heap_.size());
        heap_.push_back(v);
        sift_up(heap_.size() - 1);
    }

    /// No-op if `v` is absent.
    void remove(index_t v) {
        if(!contains(v)) return;
        const std::size_t p = pos_[v];
        const index_t last = heap_.back();
        heap_.pop_back();
        pos_[v] = kAbsent;
        if(p < heap_.size()) {
            heap_[p] = last;
            pos_[last] = static_cast<index_t>(p);
            sift_down(p);
            sift_up(pos_[last]);
        }
    }

    /// Lowers the key of `v` (no-op if absent or `k` is not smaller).
    void decrease_key(index_t v, index_t k) {
        if(!contains(v) || k >= (*keys_)[v]) return;
        if(decreased_.empty()) decreased_.assign(pos_.size(), 0);
        if(decreased_[v]++ > 0) ++double_decreases_;
        ++decreases_;
        (*keys_)[v] = k;
        sift_down(pos_[v]);
    }

    std::size_t decrease_count() const { return decreases_; }
    /// Number of decrease_key calls on a value that had been decreased before.
    std::size_t double_decrease_count() const { return double_decreases_; }

private:
    bool less(index_t a, index_t b) const {
        const auto ka = (*keys_)[a], kb = (*keys_)[b];
        if(ka != kb) return ka < kb;
        return tiebreak_ ? (*tiebreak_)[a] < (*tiebreak_)[b] : a < b;
    }

    void place(std::size_t p, index_t v) {
        heap_[p] = v;
        pos_[v] = static_cast<index_t>(p);
    }

    void sift_up(std::size_t p) {
        const index_t v = heap_[p];
        while(p > 0) {
            const std::size_t parent = (p - 1) / 2;
            if(!less(heap_[parent], v)) break;
            place(p, heap_[parent]);
            p = parent;
        }
        place(p, v);
    }

    void sift_down(std::size_t p) {
        const index_t v = heap_[p];
        const std::size_t n = heap_.size();
        for(;;) {
            std::size_t c = 2 * p + 1;
            if(c >= n) break;
            if(c + 1 < n && less(heap_[c], heap_[c + 1])) ++c;
            if(!less(v, heap_[c])) break;
            place(p, heap_[c]);
            p = c;
        }
        place(p, v);
    }

    std::vector<index_t>* keys_;
    const std::vector<index_t>* tiebreak_;
    std::vector<index_t> pos_;
    std::vector<index_t> heap_;
    std::vector<std::uint8_t> decreased_;
    std::size_t decreases_ = 0;
    std::size_t double_decreases_ = 0;
};

} // namespace tdc
