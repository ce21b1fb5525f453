#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include <tdc/core/compressor.hpp>
#include <tdc/core/registry.hpp>
#include <tdc/util/bytes.hpp>

namespace tdc {

/// Registers every compressor, coder, strategy and generator of the library.
void register_builtins(Registry& registry);

/// Process-wide registry populated by register_builtins.
const Registry& default_registry();

/// Instantiates an already resolved spec; chains become a Pipeline.
std::shared_ptr<Compressor> instantiate(const AlgorithmSpec& resolved, const Registry& registry = default_registry());

/// Resolves and instantiates spec text such as "bwt:rle:mtf:encode(huff)".
std::shared_ptr<Compressor> make_compressor(std::string_view spec_text,
                                            const Registry& registry = default_registry());

/// Produces a generator output from text such as "fib(25)".
Bytes generate(std::string_view spec_text, const Registry& registry = default_registry());

/// Header (canonical resolved spec + '%') followed by the compressed body.
Bytes compress_with_header(const AlgorithmSpec& spec, ByteView input, const Registry& registry = default_registry());
Bytes compress_with_header(std::string_view spec_text, ByteView input,
                           const Registry& registry = default_registry());

/// Combines the header spec with an explicitly supplied one. Stages with the
/// same name keep the header's arguments for every parameter the override
/// leaves unset; otherwise the override replaces the header spec.
AlgorithmSpec merge_override(const AlgorithmSpec& header, const AlgorithmSpec& override_spec,
                             const Registry& registry = default_registry());

/// Reads the header and decompresses the body, optionally with an override.
Bytes decompress_with_header(ByteView data, const std::optional<AlgorithmSpec>& override_spec = std::nullopt,
                             const Registry& registry = default_registry());

} // namespace tdc
