#include <tdc/core/spec.hpp>

#include <cctype>
#include <charconv>

#include <tdc/util/error.hpp>

namespace tdc {

SpecBox::SpecBox(AlgorithmSpec spec) : ptr_(std::make_unique<AlgorithmSpec>(std::move(spec))) {}

SpecBox::SpecBox(const SpecBox& other)
    : ptr_(other.ptr_ ? std::make_unique<AlgorithmSpec>(*other.ptr_) : nullptr) {}

SpecBox& SpecBox::operator=(const SpecBox& other) {
    if(this != &other) {
        ptr_ = other.ptr_ ? std::make_unique<AlgorithmSpec>(*other.ptr_) : nullptr;
    }
    return *this;
}

SpecBox::~SpecBox() = default;

bool SpecBox::operator==(const SpecBox& other) const {
    if(!ptr_ || !other.ptr_) return !ptr_ && !other.ptr_;
    return *ptr_ == *other.ptr_;
}

std::size_t AlgorithmSpec::stages() const {
    std::size_t k = 1;
    for(auto p = &next; *p; p = &(*p)->next) ++k;
    return k;
}

const Arg* AlgorithmSpec::find(std::string_view key) const {
    for(const auto& a : args) {
        if(a.key && *a.key == key) return &a;
    }
    return nullptr;
}

bool is_identifier(std::string_view s) {
    if(s.empty()) return false;
    if(!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for(char c : s) {
        if(!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    AlgorithmSpec parse_all() {
        auto spec = parse_chain();
        skip_ws();
        if(pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw SpecError("spec syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while(pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if(!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string parse_identifier() {
        skip_ws();
        const std::size_t start = pos_;
        if(pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
            while(pos_ < text_.size() &&
                  (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
        }
        if(start == pos_) fail("expected identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    AlgorithmSpec parse_chain() {
        AlgorithmSpec head = parse_stage();
        if(peek(':')) {
            ++pos_;
            skip_ws();
            if(pos_ == text_.size()) fail("trailing ':'");
            head.next = SpecBox(parse_chain());
        }
        return head;
    }

    AlgorithmSpec parse_stage() {
        AlgorithmSpec spec;
        spec.name = parse_identifier();
        if(peek('(')) {
            ++pos_;
            if(peek(')')) {
                ++pos_;
                return spec;
            }
            for(;;) {
                spec.args.push_back(parse_arg());
                if(peek(',')) {
                    ++pos_;
                    continue;
                }
                if(peek(')')) {
                    ++pos_;
                    break;
                }
                if(pos_ >= text_.size()) fail("unbalanced parentheses");
                fail("expected ',' or ')'");
            }
        }
        return spec;
    }

    Arg parse_arg() {
        skip_ws();
        if(pos_ >= text_.size()) fail("unbalanced parentheses");
        if(text_[pos_] == ',' || text_[pos_] == ')') fail("empty argument");

        Arg arg;
        // key = value?
        const std::size_t save = pos_;
        if(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_') {
            auto ident = parse_identifier();
            if(peek('=')) {
                ++pos_;
                arg.key = std::move(ident);
            } else {
                pos_ = save;
            }
        }
        arg.value = parse_value();
        return arg;
    }

    ArgValue parse_value() {
        skip_ws();
        if(pos_ >= text_.size()) fail("missing value");
        const char c = text_[pos_];
        if(c == ',' || c == ')') fail("empty argument");
        if(std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            const std::size_t start = pos_;
            if(c == '-') ++pos_;
            while(pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
            if(ec != std::errc() || ptr != text_.data() + pos_) {
                pos_ = start;
                fail("invalid integer");
            }
            return v;
        }
        if(c == '"') {
            ++pos_;
            const std::size_t start = pos_;
            while(pos_ < text_.size() && text_[pos_] != '"') ++pos_;
            if(pos_ >= text_.size()) fail("unterminated string");
            std::string s(text_.substr(start, pos_ - start));
            ++pos_;
            return QuotedString{std::move(s)};
        }
        return SpecBox(parse_chain());
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void serialize_into(const AlgorithmSpec& spec, std::string& out);

void serialize_value(const ArgValue& v, std::string& out) {
    if(auto i = std::get_if<std::int64_t>(&v)) {
        out += std::to_string(*i);
    } else if(auto s = std::get_if<QuotedString>(&v)) {
        if(s->value.find_first_of("\"%") != std::string::npos) {
            throw SpecError("string argument must not contain '\"' or '%'");
        }
        out += '"';
        out += s->value;
        out += '"';
    } else {
        serialize_into(*std::get<SpecBox>(v), out);
    }
}

void serialize_into(const AlgorithmSpec& spec, std::string& out) {
    out += spec.name;
    if(!spec.args.empty()) {
        out += '(';
        for(std::size_t i = 0; i < spec.args.size(); ++i) {
            if(i) out += ',';
            if(spec.args[i].key) {
                out += *spec.args[i].key;
                out += '=';
            }
            serialize_value(spec.args[i].value, out);
        }
        out += ')';
    }
    if(spec.next) {
        out += ':';
        serialize_into(*spec.next, out);
    }
}

} // namespace

AlgorithmSpec parse_spec(std::string_view text) {
    Parser p(text);
    bool blank = true;
    for(char c : text) {
        if(!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if(blank) throw SpecError("spec syntax error at position 0: empty spec");
    return p.parse_all();
}

std::string serialize(const AlgorithmSpec& spec) {
    std::string out;
    serialize_into(spec, out);
    return out;
}

} // namespace tdc
