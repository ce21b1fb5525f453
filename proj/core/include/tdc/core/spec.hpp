#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tdc {

struct AlgorithmSpec;

/// Nullable owning pointer to an AlgorithmSpec with deep-copy value semantics.
class SpecBox {
public:
    SpecBox() = default;
    SpecBox(AlgorithmSpec spec);
    SpecBox(const SpecBox& other);
    SpecBox(SpecBox&&) noexcept = default;
    SpecBox& operator=(const SpecBox& other);
    SpecBox& operator=(SpecBox&&) noexcept = default;
    ~SpecBox();

    explicit operator bool() const { return static_cast<bool>(ptr_); }
    const AlgorithmSpec& operator*() const { return *ptr_; }
    const AlgorithmSpec* operator->() const { return ptr_.get(); }
    AlgorithmSpec& operator*() { return *ptr_; }
    AlgorithmSpec* operator->() { return ptr_.get(); }

    bool operator==(const SpecBox& other) const;

private:
    std::unique_ptr<AlgorithmSpec> ptr_;
};

/// Quoted string argument, kept distinct from identifiers.
struct QuotedString {
    std::string value;
    bool operator==(const QuotedString&) const = default;
};

using ArgValue = std::variant<std::int64_t, QuotedString, SpecBox>;

struct Arg {
    std::optional<std::string> key;
    ArgValue value;
    bool operator==(const Arg&) const = default;
};

/// Parse tree of an algorithm identifier with its arguments; `next` is the
/// right operand of the pipeline operator `:`.
struct AlgorithmSpec {
    std::string name;
    std::vector<Arg> args;
    SpecBox next;

    bool operator==(const AlgorithmSpec&) const = default;

    /// Number of `:`-chained stages, at least 1.
    std::size_t stages() const;

    /// Finds a named argument.
    const Arg* find(std::string_view key) const;
};

/// Parses `a(x=1, b(c), "s"):d` style spec strings. Whitespace outside
/// quotes is insignificant; `:` is right-associative. Throws SpecError with
/// the offending position on syntax errors.
AlgorithmSpec parse_spec(std::string_view text);

/// Canonical form: no whitespace, arguments in stored order, `key=value`.
/// Throws SpecError if a string argument contains `"` or `%`.
std::string serialize(const AlgorithmSpec& spec);

bool is_identifier(std::string_view s);

} // namespace tdc
