#include <tdc/lz78u/suffix_tree.hpp>

#include <algorithm>
#include <stdexcept>

namespace tdc {

SuffixTree::SuffixTree(TextDS& ds) : text_(ds.text()) {
    ds.require(TextDS::SA | TextDS::LCP);
    const auto sa = ds.require_sa().to_vector();
    const auto lcp = ds.require_lcp().to_vector();
    build(sa, lcp);
}

SuffixTree::SuffixTree(ByteView text, std::span<const index_t> sa, std::span<const index_t> lcp) : text_(text) {
    build(sa, lcp);
}

void SuffixTree::build(std::span<const index_t> sa, std::span<const index_t> lcp) {
    const std::size_t n = sa.size();
    if(n == 0 || lcp.size() != n) throw std::invalid_argument("suffix tree: invalid SA/LCP");

    // Pass 1: nodes in creation order. lb = leftmost leaf rank, leaf = suffix
    // rank for leaves or kNone.
    std::vector<node_t> par;
    std::vector<index_t> sd, lb, leaf;
    auto make = [&](index_t depth, index_t left, index_t leaf_rank) {
        par.push_back(kNone);
        sd.push_back(depth);
        lb.push_back(left);
        leaf.push_back(leaf_rank);
        return static_cast<node_t>(par.size() - 1);
    };
    const node_t root = make(0, 0, kNone);
    std::vector<node_t> stack{root};
    for(std::size_t i = 0; i < n; ++i) {
        if(i > 0) {
            const index_t l = lcp[i];
            while(sd[stack.back()] > l) {
                const node_t last = stack.back();
                stack.pop_back();
                if(sd[stack.back()] >= l) {
                    par[last] = stack.back();
                } else {
                    const node_t v = make(l, lb[last], kNone);
                    par[last] = v;
                    stack.push_back(v);
                    break;
                }
            }
        }
        stack.push_back(make(static_cast<index_t>(n - sa[i]), static_cast<index_t>(i), static_cast<index_t>(i)));
    }
    while(stack.size() > 1) {
        const node_t last = stack.back();
        stack.pop_back();
        par[last] = stack.back();
    }

    // Children sorted by leftmost leaf, i.e. lexicographically.
    const std::size_t m = par.size();
    std::vector<index_t> begin(m + 1, 0);
    for(node_t v = 1; v < m; ++v) ++begin[par[v] + 1];
    for(std::size_t v = 0; v < m; ++v) begin[v + 1] += begin[v];
    std::vector<node_t> kids(m > 0 ? m - 1 : 0);
    {
        std::vector<index_t> fill(begin.begin(), begin.end() - 1);
        for(node_t v = 1; v < m; ++v) kids[fill[par[v]]++] = v;
        for(std::size_t v = 0; v < m; ++v) {
            std::sort(kids.begin() + begin[v], kids.begin() + begin[v + 1],
                      [&](node_t a, node_t b) { return lb[a] < lb[b]; });
        }
    }

    // Pre-order renumbering.
    std::vector<node_t> order;
    order.reserve(m);
    std::vector<node_t> dfs{root};
    while(!dfs.empty()) {
        const node_t v = dfs.back();
        dfs.pop_back();
        order.push_back(v);
        for(auto k = begin[v + 1]; k-- > begin[v];) dfs.push_back(kids[k]);
    }
    std::vector<node_t> id(m);
    for(std::size_t k = 0; k < m; ++k) id[order[k]] = static_cast<node_t>(k);

    parent_.assign(m, kNone);
    str_depth_.resize(m);
    depth_.resize(m);
    pos_.resize(m);
    internal_rank_.assign(m, kNone);
    leaf_select_.assign(n, kNone);
    child_begin_.assign(m + 1, 0);
    children_.clear();
    children_.reserve(m - 1);
    index_t internal = 0;
    for(std::size_t k = 0; k < m; ++k) {
        const node_t v = order[k];
        parent_[k] = v == root ? kNone : id[par[v]];
        str_depth_[k] = sd[v];
        depth_[k] = v == root ? 0 : depth_[parent_[k]] + 1;
        pos_[k] = sa[lb[v]];
        if(leaf[v] == kNone) {
            internal_rank_[k] = internal++;
        } else {
            leaf_select_[leaf[v]] = static_cast<node_t>(k);
        }
        child_begin_[k] = static_cast<index_t>(children_.size());
        for(auto c = begin[v]; c < begin[v + 1]; ++c) children_.push_back(id[kids[c]]);
    }
    child_begin_[m] = static_cast<index_t>(children_.size());
}

SuffixTree::node_t SuffixTree::child(node_t v, std::uint8_t c) const {
    const auto kids = children(v);
    const index_t sd = str_depth_[v];
    auto it = std::lower_bound(kids.begin(), kids.end(), c,
                               [&](node_t w, std::uint8_t ch) { return text_[pos_[w] + sd] < ch; });
    if(it == kids.end() || text_[pos_[*it] + sd] != c) return kNone;
    return *it;
}

SuffixTree::node_t SuffixTree::level_anc(node_t v, index_t d) const {
    if(d > depth_[v]) throw std::out_of_range("level_anc: depth exceeds node depth");
    node_t u = root();
    const index_t p = pos_[v];
    for(index_t k = 0; k < d; ++k) u = child(u, text_[p + str_depth_[u]]);
    return u;
}

} // namespace tdc
