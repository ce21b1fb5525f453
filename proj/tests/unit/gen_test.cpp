#include <gtest/gtest.h>

#include <tdc/core/builtin.hpp>
#include <tdc/gen/generators.hpp>
#include <tdc/util/error.hpp>

using namespace tdc;

TEST(Generators, FibonacciWords) {
    EXPECT_EQ(to_string(fibonacci_word(1)), "b");
    EXPECT_EQ(to_string(fibonacci_word(2)), "a");
    EXPECT_EQ(to_string(fibonacci_word(4)), "aba");
    EXPECT_EQ(to_string(fibonacci_word(6)), "abaababa");
    EXPECT_EQ(fibonacci_word(25).size(), 75025u);
}

TEST(Generators, ThueMorseWords) {
    EXPECT_EQ(to_string(thue_morse_word(1)), "a");
    EXPECT_EQ(to_string(thue_morse_word(3)), "abba");
    EXPECT_EQ(to_string(thue_morse_word(4)), "abbabaab");
    EXPECT_EQ(thue_morse_word(14).size(), 8192u);
    EXPECT_THROW(thue_morse_word(0), std::invalid_argument);
}

TEST(Generators, RunRichWords) {
    EXPECT_EQ(to_string(run_rich_word(1)), "abba");
    const auto w = run_rich_word(5);
    EXPECT_GT(w.size(), run_rich_word(4).size());
}

TEST(Generators, RandomAndRepetitiveAreDeterministic) {
    EXPECT_EQ(random_text(1000, 3), random_text(1000, 3));
    EXPECT_NE(random_text(1000, 3), random_text(1000, 4));
    for(auto c : random_text(1000, 3, 4)) {
        EXPECT_GE(c, 'a');
        EXPECT_LE(c, 'd');
    }
    for(auto c : random_text(1000, 3)) EXPECT_NE(c, 0);
    const auto r = repetitive_text(100000, 1);
    EXPECT_EQ(r.size(), 100000u);
    EXPECT_EQ(r, repetitive_text(100000, 1));
}

TEST(Generators, Utf8IsWellFormed) {
    const auto t = utf8_text(0xD000, 0xE100, 5000, 2);
    std::size_t i = 0, count = 0;
    while(i < t.size()) {
        const auto c = t[i];
        const std::size_t len = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
        ASSERT_LE(i + len, t.size());
        std::uint32_t cp = len == 1 ? c : c & (0x7F >> len);
        for(std::size_t k = 1; k < len; ++k) {
            ASSERT_EQ(t[i + k] & 0xC0, 0x80);
            cp = (cp << 6) | (t[i + k] & 0x3F);
        }
        EXPECT_FALSE(cp >= 0xD800 && cp <= 0xDFFF);
        EXPECT_GE(cp, 0xD000u);
        EXPECT_LE(cp, 0xE100u);
        i += len;
        ++count;
    }
    EXPECT_EQ(count, 5000u);
}

TEST(Generators, ThroughRegistry) {
    EXPECT_EQ(to_string(generate("fib(4)")), "aba");
    EXPECT_EQ(to_string(generate("thue_morse(3)")), "abba");
    EXPECT_EQ(generate("random(n=50,seed=2,sigma=3)"), random_text(50, 2, 3));
    EXPECT_EQ(generate("repetitive(500)"), repetitive_text(500, 1));
    EXPECT_THROW(generate("fib(0)"), SpecError);
    EXPECT_THROW(generate("fib(65)"), SpecError);
    EXPECT_THROW(generate("nope"), SpecError);
    EXPECT_THROW(generate("thue_morse(40)"), std::exception);
}
