#pragma once

#include <vector>

#include <tdc/util/bytes.hpp>

namespace tdc {

// Construction of the index structures over a sentinel-terminated text.
// All positions and ranks are 0-based: sa[j] is the start of the j-th
// smallest suffix, lcp[0] = 0.

/// Suffix array by induced sorting (SA-IS). The last byte of `text` must be a
/// unique 0x00 sentinel.
std::vector<index_t> build_sa(ByteView text);

std::vector<index_t> build_isa(std::span<const index_t> sa);

/// LCP array via the permuted LCP array (Phi algorithm).
std::vector<index_t> build_lcp_phi(ByteView text, std::span<const index_t> sa);

Bytes build_bwt(ByteView text, std::span<const index_t> sa);

} // namespace tdc
