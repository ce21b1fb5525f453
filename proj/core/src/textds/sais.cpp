#include <tdc/textds/construct.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <tdc/util/error.hpp>

namespace tdc {

namespace {

constexpr index_t kEmpty = std::numeric_limits<index_t>::max();

// Induced sorting (Nong, Zhang, Chan). `s[n-1]` must be the unique smallest
// symbol; the alphabet is [0, alphabet).
template<typename Char>
class InducedSorter {
public:
    InducedSorter(const Char* s, index_t* sa, index_t n, index_t alphabet)
        : s_(s), sa_(sa), n_(n), alphabet_(alphabet), stype_(n), bucket_(alphabet) {}

    void run() {
        if(n_ == 1) {
            sa_[0] = 0;
            return;
        }
        classify();

        // 1. bucket LMS positions at their bucket ends, then induce
        std::fill(sa_, sa_ + n_, kEmpty);
        bucket_ends();
        for(index_t i = 1; i < n_; ++i) {
            if(is_lms(i)) sa_[--bucket_[s_[i]]] = i;
        }
        induce_l();
        induce_s();

        // 2. compact the sorted LMS substrings into sa[0, n1)
        index_t n1 = 0;
        for(index_t i = 0; i < n_; ++i) {
            if(is_lms(sa_[i])) sa_[n1++] = sa_[i];
        }

        // 3. name the LMS substrings; names stored at sa[n1 + pos/2]
        std::fill(sa_ + n1, sa_ + n_, kEmpty);
        index_t names = 0;
        index_t prev = kEmpty;
        for(index_t i = 0; i < n1; ++i) {
            const index_t pos = sa_[i];
            bool diff = false;
            for(index_t d = 0; d < n_; ++d) {
                if(prev == kEmpty || s_[pos + d] != s_[prev + d] || stype_[pos + d] != stype_[prev + d]) {
                    diff = true;
                    break;
                }
                if(d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
            }
            if(diff) {
                ++names;
                prev = pos;
            }
            sa_[n1 + pos / 2] = names - 1;
        }
        for(index_t i = n_, j = n_; i-- > n1;) {
            if(sa_[i] != kEmpty) sa_[--j] = sa_[i];
        }

        // 4. sort the reduced string, recursively if names are not unique
        index_t* s1 = sa_ + n_ - n1;
        index_t* sa1 = sa_;
        if(names < n1) {
            InducedSorter<index_t>(s1, sa1, n1, names).run();
        } else {
            for(index_t i = 0; i < n1; ++i) sa1[s1[i]] = i;
        }

        // 5. induce the final order from the sorted LMS suffixes
        for(index_t i = 1, j = 0; i < n_; ++i) {
            if(is_lms(i)) s1[j++] = i;
        }
        for(index_t i = 0; i < n1; ++i) sa1[i] = s1[sa1[i]];
        std::fill(sa_ + n1, sa_ + n_, kEmpty);
        bucket_ends();
        for(index_t i = n1; i-- > 0;) {
            const index_t j = sa_[i];
            sa_[i] = kEmpty;
            sa_[--bucket_[s_[j]]] = j;
        }
        induce_l();
        induce_s();
    }

private:
    void classify() {
        stype_[n_ - 1] = true;
        for(index_t i = n_ - 1; i-- > 0;) {
            stype_[i] = s_[i] < s_[i + 1] || (s_[i] == s_[i + 1] && stype_[i + 1]);
        }
    }

    bool is_lms(index_t i) const { return i != kEmpty && i > 0 && stype_[i] && !stype_[i - 1]; }

    void count() {
        std::fill(bucket_.begin(), bucket_.end(), 0);
        for(index_t i = 0; i < n_; ++i) ++bucket_[s_[i]];
    }

    void bucket_starts() {
        count();
        index_t sum = 0;
        for(auto& b : bucket_) {
            const index_t c = b;
            b = sum;
            sum += c;
        }
    }

    void bucket_ends() {
        count();
        index_t sum = 0;
        for(auto& b : bucket_) {
            sum += b;
            b = sum;
        }
    }

    void induce_l() {
        bucket_starts();
        for(index_t i = 0; i < n_; ++i) {
            const index_t p = sa_[i];
            if(p == kEmpty || p == 0) continue;
            const index_t j = p - 1;
            if(!stype_[j]) sa_[bucket_[s_[j]]++] = j;
        }
    }

    void induce_s() {
        bucket_ends();
        for(index_t i = n_; i-- > 0;) {
            const index_t p = sa_[i];
            if(p == kEmpty || p == 0) continue;
            const index_t j = p - 1;
            if(stype_[j]) sa_[--bucket_[s_[j]]] = j;
        }
    }

    const Char* s_;
    index_t* sa_;
    index_t n_;
    index_t alphabet_;
    std::vector<bool> stype_;
    std::vector<index_t> bucket_;
};

void check_sentinel(ByteView text) {
    if(text.empty() || text.back() != 0) {
        throw std::invalid_argument("text must end with the 0x00 sentinel");
    }
    if(text.size() >= kEmpty) throw std::length_error("text too long");
}

} // namespace

std::vector<index_t> build_sa(ByteView text) {
    check_sentinel(text);
    if(std::find(text.begin(), text.end() - 1, 0) != text.end() - 1) {
        throw DataError("sentinel byte 0x00 occurs inside the text");
    }
    const auto n = static_cast<index_t>(text.size());
    std::vector<index_t> sa(n);
    InducedSorter<std::uint8_t>(text.data(), sa.data(), n, 256).run();
    return sa;
}

std::vector<index_t> build_isa(std::span<const index_t> sa) {
    std::vector<index_t> isa(sa.size());
    for(std::size_t j = 0; j < sa.size(); ++j) isa[sa[j]] = static_cast<index_t>(j);
    return isa;
}

std::vector<index_t> build_lcp_phi(ByteView text, std::span<const index_t> sa) {
    const std::size_t n = sa.size();
    std::vector<index_t> lcp(n, 0);
    if(n <= 1) return lcp;

    // phi[sa[j]] = sa[j-1]; then turned into the permuted LCP in place
    std::vector<index_t> plcp(n);
    plcp[sa[0]] = kEmpty;
    for(std::size_t j = 1; j < n; ++j) plcp[sa[j]] = sa[j - 1];

    std::size_t l = 0;
    for(std::size_t i = 0; i < n; ++i) {
        const index_t phi = plcp[i];
        if(phi == kEmpty) {
            plcp[i] = 0;
            l = 0;
            continue;
        }
        while(i + l < n && phi + l < n && text[i + l] == text[phi + l]) ++l;
        plcp[i] = static_cast<index_t>(l);
        if(l > 0) --l;
    }
    for(std::size_t j = 1; j < n; ++j) lcp[j] = plcp[sa[j]];
    return lcp;
}

Bytes build_bwt(ByteView text, std::span<const index_t> sa) {
    const std::size_t n = sa.size();
    Bytes bwt(n);
    for(std::size_t j = 0; j < n; ++j) {
        bwt[j] = sa[j] == 0 ? text[n - 1] : text[sa[j] - 1];
    }
    return bwt;
}

} // namespace tdc
