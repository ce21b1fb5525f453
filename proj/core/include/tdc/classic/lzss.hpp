#pragma once

#include <string>
#include <vector>

#include <tdc/util/bytes.hpp>

namespace tdc {

/// Factor of an LZ77-style factorization over 0-based text positions.
/// A literal factor covers text[pos, pos + len); a reference copies
/// text[src, src + len) to text[pos, pos + len).
struct Lz77Factor {
    index_t pos = 0;
    index_t len = 0;
    index_t src = 0;
    bool literal = true;
    bool operator==(const Lz77Factor&) const = default;
};

/// Number of reference factors.
std::size_t count_references(const std::vector<Lz77Factor>& factors);

/// Renders factors like "a (1,2) b": literal bytes as characters (0x00 as
/// '$'), references as 1-based (src,len), separated by single spaces. Each
/// literal factor may span several bytes.
std::string render_factors(ByteView text, const std::vector<Lz77Factor>& factors);

} // namespace tdc
