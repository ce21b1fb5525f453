#pragma once

#include <memory>

#include <tdc/coders/coder.hpp>

namespace tdc {

class Registry;

// Registered coders:
//   bit    integers bit-compact, literals as 8-bit bytes
//   gamma  integers as gamma(v+1), literals as gamma(byte+1)
//   delta  integers as delta(v+1), literals as delta(byte+1)
//   vbyte  integers and literals as VByte groups
//   huff   integers bit-compact, literals canonical Huffman
//   sle    integers bit-compact, literals static low-entropy (bytes + 3-grams)

std::shared_ptr<Coder> make_bit_coder();
std::shared_ptr<Coder> make_gamma_coder();
std::shared_ptr<Coder> make_delta_coder();
std::shared_ptr<Coder> make_vbyte_coder();
std::shared_ptr<Coder> make_huffman_coder();
std::shared_ptr<Coder> make_sle_coder();

void register_coders(Registry& registry);

} // namespace tdc
