#pragma once

#include <cstdint>

#include <tdc/util/bytes.hpp>

namespace tdc {

/// Produces a test string; registered under the type "generator".
class Generator {
public:
    static constexpr const char* kType = "generator";
    virtual ~Generator() = default;
    virtual Bytes generate() const = 0;
};

/// F_1 = "b", F_2 = "a", F_k = F_{k-1} F_{k-2}.
Bytes fibonacci_word(unsigned k);

/// Thue-Morse prefix of length 2^(k-1) over {a, b}: t_1 = "a", each step
/// appends the complement.
Bytes thue_morse_word(unsigned k);

/// Binary run-rich family over {a, b}: r_1 = "abba", r_k = phi(r_{k-1})
/// with phi(a) = "aab", phi(b) = "ab".
Bytes run_rich_word(unsigned k);

/// `n` uniform bytes: letters 'a'.. for sigma <= 26, else bytes 1..sigma.
/// Never contains 0x00.
Bytes random_text(std::size_t n, std::uint64_t seed, unsigned sigma = 255);

/// Text of length `n` built from a random seed block by copying earlier
/// substrings with sparse point mutations. Letters and spaces only.
Bytes repetitive_text(std::size_t n, std::uint64_t seed);

/// `count` random code points from [lo, hi] (surrogates skipped), UTF-8 encoded.
Bytes utf8_text(std::uint32_t lo, std::uint32_t hi, std::size_t count, std::uint64_t seed);

} // namespace tdc
