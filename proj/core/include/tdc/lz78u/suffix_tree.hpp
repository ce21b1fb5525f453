#pragma once

#include <limits>
#include <span>
#include <vector>

#include <tdc/textds/textds.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// Suffix tree built from SA and LCP by the LCP-interval method.
///
/// Nodes are numbered in pre-order with the root as 0; children are ordered
/// by their first edge character. Every node stores its parent, string
/// depth, tree depth and a text position where its string occurs. Leaves
/// are addressed by their lexicographic rank through leaf_select.
class SuffixTree {
public:
    using node_t = index_t;
    static constexpr node_t kNone = std::numeric_limits<node_t>::max();

    explicit SuffixTree(TextDS& ds);
    SuffixTree(ByteView text, std::span<const index_t> sa, std::span<const index_t> lcp);

    node_t root() const { return 0; }
    std::size_t size() const { return parent_.size(); }
    std::size_t leaves() const { return leaf_select_.size(); }
    std::size_t internal_nodes() const { return size() - leaves(); }

    node_t parent(node_t v) const { return parent_[v]; }
    index_t str_depth(node_t v) const { return str_depth_[v]; }
    index_t depth(node_t v) const { return depth_[v]; }
    bool is_leaf(node_t v) const { return internal_rank_[v] == kNone; }

    /// Start of an occurrence of the string of v; the suffix for a leaf.
    index_t position(node_t v) const { return pos_[v]; }

    /// Rank of an internal node among internal nodes in pre-order.
    index_t internal_rank(node_t v) const { return internal_rank_[v]; }

    /// Leaf of the suffix with lexicographic rank i (0-based).
    node_t leaf_select(index_t i) const { return leaf_select_[i]; }

    std::span<const node_t> children(node_t v) const {
        return {children_.data() + child_begin_[v], children_.data() + child_begin_[v + 1]};
    }

    /// Child of v whose edge starts with c, or kNone.
    node_t child(node_t v, std::uint8_t c) const;

    /// Ancestor of v at tree depth d (depth(root) = 0), by descent from the root.
    node_t level_anc(node_t v, index_t d) const;

    /// Edge label lambda(parent(v), v) as a text interval [begin, begin + len).
    index_t edge_begin(node_t v) const { return pos_[v] + str_depth_[parent_[v]]; }
    index_t edge_length(node_t v) const { return str_depth_[v] - str_depth_[parent_[v]]; }

    ByteView text() const { return text_; }

private:
    void build(std::span<const index_t> sa, std::span<const index_t> lcp);

    ByteView text_;
    std::vector<node_t> parent_;
    std::vector<index_t> str_depth_, depth_, pos_, internal_rank_;
    std::vector<index_t> child_begin_;
    std::vector<node_t> children_;
    std::vector<node_t> leaf_select_;
};

} // namespace tdc
