#pragma once

#include <tdc/core/spec.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// A compressed file is `<canonical spec> '%' <body>`.
inline constexpr char kHeaderSeparator = '%';
inline constexpr std::size_t kMaxHeaderScan = 4096;

/// Appends the canonical serialization of `spec` and the separator.
void write_header(const AlgorithmSpec& spec, Bytes& out);

struct Header {
    AlgorithmSpec spec;
    std::size_t body_offset = 0;
};

/// Parses the header at the start of `data`. Throws DataError if no `%`
/// occurs within the first 4096 bytes, the spec is empty or unparseable.
Header read_header(ByteView data);

} // namespace tdc
