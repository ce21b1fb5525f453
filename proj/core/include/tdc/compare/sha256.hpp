#pragma once

#include <string>

#include <tdc/util/bytes.hpp>

namespace tdc {

/// Lower-case hex SHA-256 digest of `data`.
std::string sha256_hex(ByteView data);

} // namespace tdc
