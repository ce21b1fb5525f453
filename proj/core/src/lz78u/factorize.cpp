#include <tdc/lz78u/lz78u.hpp>

#include <algorithm>
#include <stdexcept>

#include <tdc/succinct/bit_vector.hpp>
#include <tdc/textds/text.hpp>
#include <tdc/textds/construct.hpp>

namespace tdc {

Lz78uFactorization lz78u_factorize_stream(const SuffixTree& st) {
    using node_t = SuffixTree::node_t;
    const auto text = st.text();
    const std::size_t n = text.size();

    // isa from the leaves
    std::vector<index_t> isa(n);
    for(index_t i = 0; i < n; ++i) isa[st.position(st.leaf_select(i))] = i;

    // factor id per internal node, 0 = not an LZ node
    std::vector<index_t> r(st.internal_nodes(), 0);
    auto id_of = [&](node_t v) -> index_t { return v == st.root() ? 0 : r[st.internal_rank(v)]; };

    Lz78uFactorization out;
    std::size_t pos = 0;
    index_t z = 0;
    while(pos < n) {
        const node_t leaf = st.leaf_select(isa[pos]);
        const node_t p = st.parent(leaf);
        if(p == st.root() || id_of(p) != 0) {
            const index_t sd = st.str_depth(p);
            out.factors.push_back({id_of(p), static_cast<index_t>(pos + sd), 1});
            out.nodes.push_back(leaf);
            ++z;
            pos += sd + 1;
            continue;
        }
        node_t parent = st.root();
        node_t node = st.child(parent, text[pos]);
        while(id_of(node) != 0) {
            parent = node;
            node = st.child(node, text[pos + st.str_depth(node)]);
        }
        const index_t begin = static_cast<index_t>(pos + st.str_depth(parent));
        const index_t end = static_cast<index_t>(pos + st.str_depth(node));
        out.factors.push_back({id_of(parent), begin, end - begin});
        out.nodes.push_back(node);
        r[st.internal_rank(node)] = ++z;
        pos = end;
    }
    return out;
}

Lz78uFactorization lz78u_factorize_offline(const SuffixTree& st) {
    using node_t = SuffixTree::node_t;
    const auto text = st.text();
    const std::size_t n = text.size();

    // phase 1: mark the LZ-tree nodes in exploration order
    BitVector marked(st.size());
    std::vector<node_t> explored;
    std::vector<index_t> label_begin;
    std::size_t pos = 0;
    node_t node = st.root();
    while(pos < n) {
        const std::size_t before = pos;
        node = st.child(node, text[pos]);
        pos += st.is_leaf(node) ? 1 : st.edge_length(node);
        if(st.is_leaf(node) || !marked[node]) {
            marked.set(node);
            explored.push_back(node);
            label_begin.push_back(static_cast<index_t>(before));
            node = st.root();
        }
    }

    // phase 2: factor id of every marked node, then refs and labels
    const RankSelect rank(marked);
    const std::size_t z = explored.size();
    std::vector<index_t> factor_of(z);
    for(std::size_t x = 0; x < z; ++x) factor_of[rank.rank1(explored[x])] = static_cast<index_t>(x + 1);

    Lz78uFactorization out;
    out.factors.resize(z);
    out.nodes.resize(z);
    for(std::size_t k = 0; k < z; ++k) {
        const node_t v = static_cast<node_t>(rank.select1(k + 1));
        const index_t x = factor_of[k];
        const node_t p = st.parent(v);
        auto& f = out.factors[x - 1];
        f.begin = label_begin[x - 1];
        f.len = st.is_leaf(v) ? 1 : st.edge_length(v);
        f.ref = p == st.root() ? 0 : factor_of[rank.rank1(p)];
        out.nodes[x - 1] = v;
    }
    return out;
}

bool same_factors(ByteView text, const std::vector<Lz78uFactor>& a, const std::vector<Lz78uFactor>& b) {
    if(a.size() != b.size()) return false;
    for(std::size_t x = 0; x < a.size(); ++x) {
        if(a[x].ref != b[x].ref || a[x].len != b[x].len) return false;
        if(!std::equal(text.begin() + a[x].begin, text.begin() + a[x].begin + a[x].len, text.begin() + b[x].begin)) {
            return false;
        }
    }
    return true;
}

std::string render_lz78u(ByteView text, const std::vector<Lz78uFactor>& factors) {
    std::string out;
    for(const auto& f : factors) {
        out += '(' + std::to_string(f.ref) + ',';
        for(index_t k = 0; k < f.len; ++k) {
            const auto c = text[f.begin + k];
            out += c == kSentinel ? '$' : static_cast<char>(c);
        }
        out += ')';
    }
    return out;
}

std::vector<std::vector<LabelToken>> lz78u_buffer_labels(const SuffixTree& st, const Lz78uFactorization& f,
                                                         index_t threshold) {
    using node_t = SuffixTree::node_t;
    if(threshold == 0) throw std::invalid_argument("lz78u: threshold must be >= 1");
    const auto text = st.text();

    // factor id per internal node; leaf factors are never referenced
    std::vector<index_t> id(st.internal_nodes(), 0);
    for(std::size_t x = 0; x < f.nodes.size(); ++x) {
        if(!st.is_leaf(f.nodes[x])) id[st.internal_rank(f.nodes[x])] = static_cast<index_t>(x + 1);
    }

    std::vector<std::vector<LabelToken>> tokens(f.factors.size());
    for(std::size_t x = 0; x < f.factors.size(); ++x) {
        const auto& fac = f.factors[x];
        const index_t own = static_cast<index_t>(x + 1);
        auto& out = tokens[x];
        index_t q = fac.begin;
        const index_t end = fac.begin + fac.len;
        while(q < end) {
            // deepest earlier LZ node on the path of text[q..] that fits the label
            node_t best = SuffixTree::kNone;
            node_t v = st.root();
            for(;;) {
                if(q + st.str_depth(v) >= end) break;
                const node_t c = st.child(v, text[q + st.str_depth(v)]);
                if(c == SuffixTree::kNone || st.is_leaf(c)) break;
                const index_t cid = id[st.internal_rank(c)];
                if(cid == 0 || cid >= own || q + st.str_depth(c) > end) break;
                v = c;
                best = c;
            }
            if(best != SuffixTree::kNone && st.str_depth(best) >= threshold) {
                out.push_back({false, id[st.internal_rank(best)], q, st.str_depth(best)});
                q += st.str_depth(best);
            } else {
                if(!out.empty() && out.back().literal) {
                    ++out.back().len;
                } else {
                    out.push_back({true, 0, q, 1});
                }
                ++q;
            }
        }
    }
    return tokens;
}

} // namespace tdc
