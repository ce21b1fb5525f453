#include <tdc/gen/generators.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tdc {

namespace {

constexpr std::size_t kMaxGenerated = std::size_t(1) << 31;

void check_size(std::size_t n) {
    if(n > kMaxGenerated) throw std::length_error("generator: output too large");
}

} // namespace

Bytes fibonacci_word(unsigned k) {
    if(k == 0) throw std::invalid_argument("fib: k must be >= 1");
    Bytes prev = {'b'}, cur = {'a'};
    if(k == 1) return prev;
    for(unsigned i = 2; i < k; ++i) {
        check_size(cur.size() + prev.size());
        Bytes next = cur;
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Bytes thue_morse_word(unsigned k) {
    if(k == 0) throw std::invalid_argument("thue_morse: k must be >= 1");
    if(k > 32) throw std::length_error("thue_morse: k too large");
    Bytes t = {'a'};
    for(unsigned i = 1; i < k; ++i) {
        const std::size_t m = t.size();
        for(std::size_t j = 0; j < m; ++j) t.push_back(t[j] == 'a' ? 'b' : 'a');
    }
    return t;
}

Bytes run_rich_word(unsigned k) {
    if(k == 0) throw std::invalid_argument("run_rich: k must be >= 1");
    Bytes r = {'a', 'b', 'b', 'a'};
    for(unsigned i = 1; i < k; ++i) {
        Bytes next;
        for(auto c : r) {
            if(c == 'a') {
                next.insert(next.end(), {'a', 'a', 'b'});
            } else {
                next.insert(next.end(), {'a', 'b'});
            }
        }
        check_size(next.size());
        r = std::move(next);
    }
    return r;
}

Bytes random_text(std::size_t n, std::uint64_t seed, unsigned sigma) {
    check_size(n);
    if(sigma == 0 || sigma > 255) throw std::invalid_argument("random: sigma must be in [1, 255]");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> dist(0, sigma - 1);
    const unsigned base = sigma <= 26 ? 'a' : 1;
    Bytes out(n);
    for(auto& b : out) b = static_cast<std::uint8_t>(base + dist(rng));
    return out;
}

Bytes repetitive_text(std::size_t n, std::uint64_t seed) {
    check_size(n);
    static constexpr char kAlphabet[] = "abcdefghijklmnopqrstuvwxyz      ";
    constexpr std::size_t kSigma = sizeof(kAlphabet) - 1;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> letter(0, kSigma - 1);
    Bytes out;
    out.reserve(n);
    const std::size_t seed_block = std::min<std::size_t>(n, 2048);
    for(std::size_t i = 0; i < seed_block; ++i) out.push_back(static_cast<std::uint8_t>(kAlphabet[letter(rng)]));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while(out.size() < n) {
        const std::size_t len = std::min<std::size_t>(n - out.size(), 64 + rng() % 4096);
        const std::size_t src = rng() % (out.size() - std::min(out.size() - 1, len / 2));
        for(std::size_t k = 0; k < len; ++k) {
            if(coin(rng) < 0.002) {
                out.push_back(static_cast<std::uint8_t>(kAlphabet[letter(rng)]));
            } else {
                out.push_back(out[src + k]);
            }
        }
    }
    return out;
}

Bytes utf8_text(std::uint32_t lo, std::uint32_t hi, std::size_t count, std::uint64_t seed) {
    if(lo == 0 || lo > hi || hi > 0x10FFFF) throw std::invalid_argument("utf8: invalid code point range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(lo, hi);
    Bytes out;
    for(std::size_t i = 0; i < count;) {
        const std::uint32_t cp = dist(rng);
        if(cp >= 0xD800 && cp <= 0xDFFF) {
            if(lo >= 0xD800 && hi <= 0xDFFF) throw std::invalid_argument("utf8: range holds only surrogates");
            continue;
        }
        if(cp < 0x80) {
            out.push_back(static_cast<std::uint8_t>(cp));
        } else if(cp < 0x800) {
            out.push_back(static_cast<std::uint8_t>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<std::uint8_t>(0x80 | (cp & 0x3F)));
        } else if(cp < 0x10000) {
            out.push_back(static_cast<std::uint8_t>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<std::uint8_t>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<std::uint8_t>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<std::uint8_t>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<std::uint8_t>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<std::uint8_t>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<std::uint8_t>(0x80 | (cp & 0x3F)));
        }
        ++i;
    }
    return out;
}

} // namespace tdc
