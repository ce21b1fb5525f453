#pragma once

#include <tdc/util/bytes.hpp>

namespace tdc {

inline constexpr std::uint8_t kSentinel = 0;

/// Copies `input` and appends the 0x00 sentinel. Inputs already containing a
/// 0x00 byte are rejected with a DataError.
Bytes make_text(ByteView input);

/// Inverse of make_text: checks and strips the trailing sentinel.
Bytes strip_sentinel(Bytes text);

} // namespace tdc
